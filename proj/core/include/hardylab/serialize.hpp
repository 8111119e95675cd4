#pragma once

#include <iosfwd>
#include <string>

#include "hardylab/cov_verify.hpp"
#include "hardylab/fuzz.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/report.hpp"
#include "hardylab/seq.hpp"
#include "hardylab/sharpness.hpp"

namespace hardylab::io {

// Sequence file: one `<index> <rational>` per line, indices strictly
// increasing, lines starting with `#` are comments, blank lines ignored.
seq::Seq read_seq(std::istream& in);
seq::Seq read_seq_file(const std::string& path);
void write_seq(std::ostream& out, const seq::Seq& a);

enum class Format { Text, Machine };

// Machine format is one self-describing JSON object per line with exact
// rationals rendered as `num/den` strings. Text format is key = value lines.
void write_cov_report(std::ostream& out, const cov::CovReport& r, Format f);
void write_report(std::ostream& out, const std::string& check, const Report& r, Format f);
void write_hardy_report(std::ostream& out, const hardy::HardyReport& r, Format f);
void write_fuzz_witness(std::ostream& out, const cov::FuzzWitness& w, Format f);

// Sweep table: `eps,N,ratio_lower,ratio_upper,p_prime,digits` rows. Enclosure
// ends are printed in decimal with directed rounding at the stated digits.
void write_sweep_table(std::ostream& out, const std::vector<hardy::SweepRow>& rows,
                       const Rational& p_prime, unsigned digits, Format f);

std::string seq_to_compact_string(const seq::Seq& a);

}  // namespace hardylab::io
