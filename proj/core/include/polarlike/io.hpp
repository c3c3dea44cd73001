#pragma once

#include <string>

#include "polarlike/sim.hpp"
#include "polarlike/transform.hpp"

namespace polarlike {

/// Generator matrix text format: line 1 is "k n", then k lines of n
/// space-separated 0/1 digits.
BitMatrix load_generator(const std::string& path);
void save_generator(const std::string& path, const BitMatrix& g);

/// Transformation file: header "N n k"; "perm:" with N 1-based integers;
/// "R:" block of N/2 lines with one 0/1 digit per stage; "dropped:" with
/// the 1-based untransmitted positions (may be empty); optional "mdf:"
/// block of k lines by N digits used purely as an integrity check.
void save_transformation(const std::string& path, const Transformation& t,
                         bool include_mdf = true);

/// Rebuilds the transformation from the file plus the original generator.
/// Throws ParseError on malformed input, ConfigMismatch when g does not
/// match the header, IntegrityError when a stored mdf block disagrees with
/// the recomputation.
Transformation load_transformation(const std::string& path, const BitMatrix& g);

/// Result CSV with the fixed schema
/// ebno_db,decoder,list_size,frames,frame_errors,bit_errors,fer,ber,candidates,wall_seconds,seed
std::string to_csv(const SimResult& result);
SimResult parse_csv(const std::string& text);
void save_csv(const std::string& path, const SimResult& result);

}  // namespace polarlike
