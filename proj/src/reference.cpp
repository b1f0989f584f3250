#include "wtwist/search.hpp"

namespace wtwist {

namespace {

ReferenceTwistRow row(std::vector<long> base, std::vector<long> fiber,
                      long ell, std::vector<long> image, long degree,
                      std::string fibers = "",
                      std::optional<long> chi = std::nullopt,
                      std::optional<long> h11 = std::nullopt) {
  ReferenceTwistRow r;
  for (long b : base) r.base.emplace_back(b);
  for (long f : fiber) r.fiber.emplace_back(f);
  r.ell = ell;
  for (long i : image) r.image.emplace_back(i);
  r.degree = degree;
  r.fibers = std::move(fibers);
  if (chi) r.chi = Int(*chi);
  if (h11) r.h11 = Int(*h11);
  return r;
}

}  // namespace

// Twisted K3 surfaces fibered in constant-modulus elliptic curves, with the
// singular fibers of the induced elliptic fibration (merged, ordered by the
// local monodromy exponent).
const std::vector<ReferenceTwistRow>& reference_k3_rows() {
  static const std::vector<ReferenceTwistRow> rows = {
      row({2, 1, 1}, {1, 1, 1}, 3, {1, 1, 2, 2}, 6, "6xIV"),
      row({2, 1, 1}, {1, 1, 2}, 4, {1, 1, 2, 4}, 8, "8xIII"),
      row({2, 1, 1}, {1, 2, 3}, 6, {1, 1, 4, 6}, 12, "12xII"),
      row({3, 1, 2}, {1, 1, 2}, 4, {1, 2, 3, 6}, 12, "6xIII+1xI0*"),
      row({3, 1, 2}, {1, 2, 3}, 6, {1, 2, 6, 9}, 18, "9xII+1xI0*"),
      row({4, 1, 3}, {1, 1, 1}, 3, {1, 3, 4, 4}, 12, "4xIV+1xIV*"),
      row({4, 1, 3}, {1, 2, 3}, 6, {1, 3, 8, 12}, 24, "8xII+1xIV*"),
      row({5, 1, 4}, {1, 1, 2}, 4, {1, 4, 5, 10}, 20, "5xIII+1xIII*"),
      row({7, 1, 6}, {1, 2, 3}, 6, {1, 6, 14, 21}, 42, "7xII+1xII*"),
      row({5, 2, 3}, {1, 2, 3}, 6, {2, 3, 10, 15}, 30, "5xII+1xI0*+1xIV*"),
      row({11, 5, 6}, {1, 2, 3}, 6, {5, 6, 22, 33}, 66, "2xII+2xII*"),
  };
  return rows;
}

// Elliptically fibered Calabi-Yau threefolds over Fermat-realizable surface
// bases with w0 <= 14.
const std::vector<ReferenceTwistRow>& reference_cy3_elliptic_rows() {
  static const std::vector<ReferenceTwistRow> rows = {
      row({3, 1, 1, 1}, {1, 1, 1}, 3, {1, 1, 1, 3, 3}, 9),
      row({3, 1, 1, 1}, {1, 1, 2}, 4, {1, 1, 1, 3, 6}, 12),
      row({3, 1, 1, 1}, {1, 2, 3}, 6, {1, 1, 1, 6, 9}, 18),
      row({4, 1, 1, 2}, {1, 1, 1}, 3, {1, 1, 2, 4, 4}, 12),
      row({4, 1, 1, 2}, {1, 1, 2}, 4, {1, 1, 2, 4, 8}, 16),
      row({4, 1, 1, 2}, {1, 2, 3}, 6, {1, 1, 2, 8, 12}, 24),
      row({5, 1, 1, 3}, {1, 1, 1}, 3, {1, 1, 3, 5, 5}, 15),
      row({5, 1, 1, 3}, {1, 2, 3}, 6, {1, 1, 3, 10, 15}, 30),
      row({5, 1, 2, 2}, {1, 1, 2}, 4, {1, 2, 2, 5, 10}, 20),
      row({5, 1, 2, 2}, {1, 2, 3}, 6, {1, 2, 2, 10, 15}, 30),
      row({6, 1, 1, 4}, {1, 1, 2}, 4, {1, 1, 4, 6, 12}, 24),
      row({6, 1, 1, 4}, {1, 2, 3}, 6, {1, 1, 4, 12, 18}, 36),
      row({6, 1, 2, 3}, {1, 1, 1}, 3, {1, 2, 3, 6, 6}, 18),
      row({6, 1, 2, 3}, {1, 1, 2}, 4, {1, 2, 3, 6, 12}, 24),
      row({6, 1, 2, 3}, {1, 2, 3}, 6, {1, 2, 3, 12, 18}, 36),
      row({7, 1, 2, 4}, {1, 1, 2}, 4, {1, 2, 4, 7, 14}, 28),
      row({7, 1, 3, 3}, {1, 1, 1}, 3, {1, 3, 3, 7, 7}, 21),
      row({7, 1, 3, 3}, {1, 2, 3}, 6, {1, 3, 3, 14, 21}, 42),
      row({7, 2, 2, 3}, {1, 2, 3}, 6, {2, 2, 3, 14, 21}, 42),
      row({8, 1, 1, 6}, {1, 1, 1}, 3, {1, 1, 6, 8, 8}, 24),
      row({8, 1, 1, 6}, {1, 2, 3}, 6, {1, 1, 6, 16, 24}, 48),
      row({8, 1, 3, 4}, {1, 2, 3}, 6, {1, 3, 4, 16, 24}, 48),
      row({8, 2, 3, 3}, {1, 2, 3}, 6, {2, 3, 3, 16, 24}, 48),
      row({9, 1, 2, 6}, {1, 1, 2}, 4, {1, 2, 6, 9, 18}, 36),
      row({9, 1, 2, 6}, {1, 2, 3}, 6, {1, 2, 6, 18, 27}, 54),
      row({9, 1, 4, 4}, {1, 1, 2}, 4, {1, 4, 4, 9, 18}, 36),
      row({9, 2, 3, 4}, {1, 1, 2}, 4, {2, 3, 4, 9, 18}, 36),
      row({10, 1, 1, 8}, {1, 1, 2}, 4, {1, 1, 8, 10, 20}, 40),
      row({10, 1, 3, 6}, {1, 1, 1}, 3, {1, 3, 6, 10, 10}, 30),
      row({10, 1, 3, 6}, {1, 2, 3}, 6, {1, 3, 6, 20, 30}, 60),
      row({10, 2, 3, 5}, {1, 1, 1}, 3, {2, 3, 5, 10, 10}, 30),
      row({10, 2, 3, 5}, {1, 2, 3}, 6, {2, 3, 5, 20, 30}, 60),
      row({10, 3, 3, 4}, {1, 2, 3}, 6, {3, 3, 4, 20, 30}, 60),
      row({12, 1, 2, 9}, {1, 1, 1}, 3, {1, 2, 9, 12, 12}, 36),
      row({12, 1, 2, 9}, {1, 2, 3}, 6, {1, 2, 9, 24, 36}, 72),
      row({13, 1, 6, 6}, {1, 2, 3}, 6, {1, 6, 6, 26, 39}, 78),
      row({14, 1, 1, 12}, {1, 2, 3}, 6, {1, 1, 12, 28, 42}, 84),
  };
  return rows;
}

// K3-fibered Calabi-Yau threefolds obtained by twisting curve bases with the
// maximal-automorphism K3 fibers, with orbifold Euler numbers.
const std::vector<ReferenceTwistRow>& reference_cy3_k3_rows() {
  static const std::vector<ReferenceTwistRow> rows = {
      row({2, 1, 1}, {1, 1, 2, 2}, 6, {1, 1, 2, 4, 4}, 12, "", -192),
      row({2, 1, 1}, {1, 2, 3, 6}, 12, {1, 1, 4, 6, 12}, 24, "", -312),
      row({2, 1, 1}, {1, 6, 14, 21}, 42, {1, 1, 12, 28, 42}, 84, "", -960),
      row({3, 1, 2}, {1, 1, 2, 2}, 6, {1, 2, 3, 6, 6}, 18, "", -144),
      row({3, 1, 2}, {1, 2, 3, 6}, 12, {1, 2, 6, 9, 18}, 36, "", -228),
      row({3, 1, 2}, {1, 6, 14, 21}, 42, {1, 2, 18, 42, 63}, 126, "", -720),
      row({4, 1, 3}, {1, 1, 2, 2}, 6, {1, 3, 4, 8, 8}, 24, "", -120),
      row({4, 1, 3}, {1, 2, 3, 6}, 12, {1, 3, 8, 12, 24}, 48, "", -192),
      row({4, 1, 3}, {1, 6, 14, 21}, 42, {1, 3, 24, 56, 84}, 168, "", -624),
      row({5, 1, 4}, {1, 2, 3, 6}, 12, {1, 4, 10, 15, 30}, 60, "", -168),
      row({7, 1, 6}, {1, 2, 3, 6}, 12, {1, 6, 14, 21, 42}, 84, "", -132),
      row({7, 1, 6}, {1, 6, 14, 21}, 42, {1, 6, 42, 98, 147}, 294, "", -480),
      row({5, 2, 3}, {1, 1, 2, 2}, 6, {2, 3, 5, 10, 10}, 30, "", -72),
      row({5, 2, 3}, {1, 2, 3, 6}, 12, {2, 3, 10, 15, 30}, 60, "", -108),
      row({5, 2, 3}, {1, 6, 14, 21}, 42, {2, 3, 30, 70, 105}, 210, "", -384),
  };
  return rows;
}

// Chain-equation K3 fibrations over non-Fermat surface bases (fiber always
// the order-6 elliptic curve), with chi and h^{1,1} of a crepant resolution.
const std::vector<ReferenceTwistRow>& reference_large_chi_rows() {
  static const std::vector<ReferenceTwistRow> rows = {
      row({581, 41, 42, 498}, {1, 2, 3}, 6, {41, 42, 498, 1162, 1743}, 3486,
          "", 960, 491),
      row({498, 36, 41, 421}, {1, 2, 3}, 6, {36, 41, 421, 996, 1494}, 2988,
          "", 960, 491),
      row({539, 36, 41, 462}, {1, 2, 3}, 6, {36, 41, 462, 1078, 1617}, 3234,
          "", 900, 462),
      row({469, 31, 42, 396}, {1, 2, 3}, 6, {31, 42, 396, 938, 1407}, 2814,
          "", 900, 462),
      row({463, 31, 41, 391}, {1, 2, 3}, 6, {31, 41, 391, 926, 1389}, 2778,
          "", 900, 462),
      row({433, 31, 36, 366}, {1, 2, 3}, 6, {31, 36, 366, 866, 1299}, 2598,
          "", 840, 433),
      row({483, 28, 41, 414}, {1, 2, 3}, 6, {28, 41, 414, 966, 1449}, 2898,
          "", 804, 416),
      row({414, 24, 41, 349}, {1, 2, 3}, 6, {24, 41, 349, 828, 1242}, 2484,
          "", 804, 416),
      row({385, 28, 31, 326}, {1, 2, 3}, 6, {28, 31, 326, 770, 1155}, 2310,
          "", 744, 387),
      row({434, 21, 41, 372}, {1, 2, 3}, 6, {21, 41, 372, 868, 1302}, 2604,
          "", 720, 377),
      row({372, 18, 41, 313}, {1, 2, 3}, 6, {18, 41, 313, 744, 1116}, 2232,
          "", 720, 377),
  };
  return rows;
}

}  // namespace wtwist
