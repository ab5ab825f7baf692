#pragma once

#include "pqszasz/pq_calculus.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pqszasz {

enum class FunctionClass {
  bounded, ///< continuous and bounded on [0, inf)
  C2,      ///< |f(x)| <= M (1 + x^2)
  C2_star, ///< C2 with f(x)/(1+x^2) convergent as x -> inf
};

struct TestFunction {
  std::string id;
  RealFunction f;
  RealFunction f1; ///< empty when f is not differentiable
  RealFunction f2;
  std::vector<FunctionClass> classes;
  /// M with |f(x)| <= M (1 + x^2); zero for functions outside C2.
  double growth_constant = 0.0;

  bool in(FunctionClass c) const;
  bool has_derivatives() const { return static_cast<bool>(f1) && static_cast<bool>(f2); }
};

/// e0, e1, e2, x3, x4, exp-neg, sin, recip, kink.
const std::vector<TestFunction>& test_function_corpus();

/// Throws ValidationError for an unknown id.
const TestFunction& find_test_function(std::string_view id);

/// Corpus members carrying the given class tag.
std::vector<TestFunction> corpus_subset(FunctionClass c);

} // namespace pqszasz
