#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vgit/lines.hpp"
#include "vgit/quadrics.hpp"

namespace vgit {

/// Diagonal one-parameter subgroup diag(s^r0, ..., s^r5) with sum r = 0.
class OnePS {
 public:
  using Weights = std::array<long, 6>;
  explicit OnePS(Weights r);
  OnePS(std::initializer_list<long> r);
  static OnePS trivial() { return OnePS(Weights{}); }

  const Weights& r() const noexcept { return r_; }
  long operator[](std::size_t i) const { return r_[i]; }
  bool is_trivial() const;
  OnePS scaled(long k) const;
  OnePS permuted(const std::array<int, 6>& sigma) const;  // result[sigma[i]] = r[i]
  std::string str() const;

  friend bool operator==(const OnePS&, const OnePS&) = default;

 private:
  Weights r_{};
};

using Character = std::array<int, 6>;

struct StateSet {
  std::vector<std::pair<int, int>> line_states;        // {i, j} with p_ij != 0
  std::vector<std::array<int, 4>> pencil_states;       // (i, j, k, l): monomials x_i x_j and x_k x_l
  /// Distinct characters: e_i + e_j + e_k + e_l for pencil states and -(e_i + e_j) for lines.
  std::vector<Character> pencil_characters() const;
  std::vector<Character> line_characters() const;
};

StateSet line_state_set(const ProjLine& l);
StateSet pencil_state_set(const RPencil& p);
StateSet state_set(const RPencil& p, const ProjLine& l);

long mu_line(const ProjLine& l, const OnePS& lambda);
long mu_pencil(const RPencil& p, const OnePS& lambda);
Rational mu_t(const RPencil& p, const ProjLine& l, const OnePS& lambda, const Rational& t);
Rational mu_t(const StateSet& s, const OnePS& lambda, const Rational& t);

enum class Status { Stable, Semistable, Polystable, Unstable, Undetermined };
std::string to_string(Status s);

/// One summand of a convex witness: weight * (pencil character + t * line character).
struct WitnessTerm {
  Character pencil;
  Character line;
  Rational weight;
};

struct Certificate {
  enum class Kind { None, OneParameterSubgroup, ConvexWitness, RuleCitation };
  Kind kind = Kind::None;
  /// Substitution x -> frame * x under which the 1-PS or witness is diagonal.
  RMatrix frame = RMatrix::identity(kDim);
  std::optional<OnePS> lambda;
  Rational weight;  // mu_t of lambda in the frame
  std::vector<WitnessTerm> witness;
  std::string rule;
};

std::string to_string(Certificate::Kind k);

struct Verdict {
  Status status = Status::Undetermined;
  Rational t;
  Certificate certificate;
  std::vector<std::string> trail;
};

/// Decides torus (semi)stability for the diagonal torus of the current coordinates.
Verdict torus_verdict(const RPencil& p, const ProjLine& l, const Rational& t);

struct WorstOnePS {
  OnePS lambda;
  Rational value;  // minimum of mu_t over the box [-1, 1]^6 with sum r = 0
};
WorstOnePS worst_torus_1ps(const RPencil& p, const ProjLine& l, const Rational& t);

struct CatalogHit {
  OnePS lambda;
  RMatrix frame;
  Rational weight;
  std::string reason;
};
std::optional<CatalogHit> catalog_destabilize(const RPencil& p, const ProjLine& l, const Rational& t);

/// Supplies the threshold t0; an empty result means the value is unavailable.
using ThresholdSource = std::function<std::optional<Rational>()>;
ThresholdSource ledger_threshold();

Verdict pair_verdict(const RPencil& p, const ProjLine& l, const Rational& t,
                     const ThresholdSource& threshold = ledger_threshold());

/// pair_verdict at t = t0; throws when the threshold source is empty.
Verdict k_stability_verdict(const RPencil& p, const ProjLine& l,
                            const ThresholdSource& threshold = ledger_threshold());

struct ScanRow {
  Rational t;
  Verdict verdict;
  bool changed = false;  // status differs from the previous row
};
std::vector<ScanRow> wall_scan(const RPencil& p, const ProjLine& l, const std::vector<Rational>& ts);

/// Re-checks a verdict's certificate against the pair.
bool verify_certificate(const RPencil& p, const ProjLine& l, const Verdict& v);

}  // namespace vgit
