#pragma once

#include "staircase/graph.hpp"
#include "staircase/multivariate.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace staircase {

/// One coefficient polynomial of a closed-form theorem, in the variables
/// x, t1, t2, k. `printed` is the published expression transliterated to
/// ASCII; `corrected` is empty when the printed form is right.
struct TheoremPiece {
  Family family;
  std::string_view name;
  std::string_view printed;
  std::string_view corrected;
};

/// Variable order of every piece: x, t1, t2, k.
inline constexpr std::string_view kTheoremVariables[] = {"x", "t1", "t2", "k"};

std::span<const TheoremPiece> theorem_pieces();

/// Throws std::out_of_range for an unknown (family, name).
const TheoremPiece& theorem_piece(Family family, std::string_view name);

/// Parsed piece; `corrected_form` falls back to the printed text.
const MultiPolynomial& piece_polynomial(Family family, std::string_view name, bool corrected_form);

/// FNV-1a (64 bit) over family, name, printed and corrected text of every
/// piece, each field followed by '\n'.
std::uint64_t theorem_table_checksum();

/// Checksum of the reviewed table. A mismatch means the transcription changed.
inline constexpr std::uint64_t kReviewedTheoremTableChecksum = 0xa81c15467b243820;

}  // namespace staircase
