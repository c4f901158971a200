#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "gwp/bruteforce.hpp"
#include "gwp/eda.hpp"
#include "gwp/oracle.hpp"

namespace gwp {

struct PdeReport {
  std::size_t D = 0;
  std::size_t E = 0;
  std::size_t max_length = 0;
  std::size_t short_words_checked = 0;  // reduced words of length <= E
  std::size_t long_words_checked = 0;   // reduced words of length <= max_length
  /// Shortlex-least reduced word of length <= E that is not geodesic.
  std::optional<Word> geodesic_violation;
  /// Shortlex-least reduced word representing an element of length <= D
  /// that is not geodesic.
  std::optional<Word> d_geodesic_violation;

  bool passed() const noexcept { return !geodesic_violation && !d_geodesic_violation; }
};

/// Checks geodesy of the words left reduced by the plain rules: every such
/// word of length <= E must be geodesic, and every such word of length <=
/// max_length (default 2D) whose element has length <= D must be geodesic.
/// Throws PreconditionError unless D >= E.
PdeReport verify_pde(const Eda& eda, const NormalFormOracle& oracle, std::size_t D,
                     std::size_t E, std::optional<std::size_t> max_length = std::nullopt);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

struct RealtimeReport {
  std::size_t max_length = 0;
  std::size_t words_checked = 0;
  /// max |tape| / coset length over words outside H.
  Fraction max_ratio{0, 1};
  std::optional<Word> max_ratio_witness;
  /// Words whose tape is empty exactly when they are not in H.
  std::size_t membership_mismatches = 0;
  std::optional<Word> membership_witness;
  /// Tapes longer than R whose coset length is below half their length.
  std::optional<std::size_t> R;
  std::size_t distance_checked = 0;
  std::size_t distance_violations = 0;
  std::optional<Word> distance_witness;

  bool passed() const noexcept {
    return membership_mismatches == 0 && distance_violations == 0;
  }
};

/// Streams every word of length <= max_length through the eda and compares
/// each tape with the coset table.  With R set, every tape w1 with |w1| > R
/// is also checked against coset_length(H w1) >= |w1| / 2.  Throws
/// PreconditionError when max_length exceeds the table radius.
RealtimeReport verify_realtime_bound(const Eda& eda, const CosetTable& table,
                                     std::size_t max_length,
                                     std::optional<std::size_t> R = std::nullopt,
                                     unsigned jobs = 1);

}  // namespace gwp
