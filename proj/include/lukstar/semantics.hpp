#pragma once

// Matrix semantics over L*_{n+1}: homomorphic evaluation and brute-force
// validity / consequence over every valuation.

#include <cstdint>
#include <optional>
#include <vector>

#include "lukstar/chain.hpp"
#include "lukstar/formula.hpp"
#include "lukstar/star_algebra.hpp"

namespace lukstar {

/// Lambda*_{n+1,i}: designated values are F_{i/n} = {x >= i/n}.
struct Matrix {
  int n = 1;
  int i = 1;

  Matrix(int n_, int i_) : n(n_), i(i_) {
    LUKSTAR_EXPECT(n >= 1 && 1 <= i && i <= n);
  }
  bool designated(int num) const noexcept { return num >= i; }
};

using Valuation = std::vector<Elem>;

/// Throws UnboundVariable when v does not cover the formula.
Elem eval(const Formula& f, const Chain& chain, const Valuation& v);

/// Index-valued evaluation in an arbitrary star algebra (join = max).
int eval(const Formula& f, const StarAlgebra& alg, const std::vector<int>& v);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Verdict {
  bool holds = true;
  std::optional<Valuation> countermodel;  // first failing valuation
  std::uint64_t valuations = 0;
};

/// Valuations are enumerated with p0 as the most significant digit.
/// Throws BudgetExceeded if (n+1)^vars exceeds the budget.
Verdict is_valid(const Matrix& m, const Formula& f,
                 std::uint64_t budget = kDefaultBudget);
Verdict consequence(const Matrix& m, const std::vector<Formula>& premises,
                    const Formula& f, std::uint64_t budget = kDefaultBudget);

/// Evaluates several formulas over every valuation of `vars` variables in
/// fixed-size chunks. Shared subformulas are evaluated once per chunk.
class BatchEvaluator {
 public:
  static constexpr std::size_t kChunk = 1024;

  BatchEvaluator(const StarAlgebra& alg, const std::vector<Formula>& roots,
                 int vars);

  std::uint64_t total() const noexcept { return total_; }
  /// Evaluates valuations [first, first + count), count <= kChunk.
  void run(std::uint64_t first, std::size_t count);
  const std::uint16_t* root(std::size_t r) const;
  /// Value of variable `var` in valuation number `index`.
  int digit(std::uint64_t index, int var) const;

 private:
  struct Instr {
    NodeKind kind;
    int a = -1, b = -1;  // operand slots, or variable index for Var
  };
  const StarAlgebra& alg_;
  int vars_;
  std::uint64_t total_ = 1;
  std::vector<Instr> code_;
  std::vector<int> root_slot_;
  std::vector<std::uint16_t> cells_;
};

}  // namespace lukstar
