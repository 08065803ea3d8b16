#pragma once

#include <map>
#include <string>
#include <vector>

#include "mwp/combination.hpp"
#include "mwp/config.hpp"
#include "mwp/index.hpp"

namespace mwp {

// Antipode relation attached to a source index of weight k: the products
// G~ * G~ over compositions with n_i = 1, expanded by stuffle into symbols
// of weight k - 1.
Combination antipode_relation(const Index& source);

// Rows over the basis compositions_ge2(weight), kept in reduced row echelon
// form over Q.
class RelationMatrix {
 public:
  explicit RelationMatrix(int weight);

  int weight() const { return weight_; }
  const std::vector<Index>& columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  // Returns true when the row enlarges the span.
  bool add(const Combination& row);
  bool contains(const Combination& row) const;
  // Basis of the span as combinations.
  std::vector<Combination> basis() const;

 private:
  std::vector<Rational> dense(const Combination& row) const;
  void reduce(std::vector<Rational>& v) const;

  int weight_;
  std::vector<Index> columns_;
  std::map<Index, std::size_t> column_of_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// Span of the antipode relations of weight w (sources of weight w + 1).
RelationMatrix antipode_span(int weight);

// Rank of the span of stuffle(u, A) with A an antipode relation of weight
// w - |u| and u any admissible index, the empty one included.
int relation_rank(int weight);
RelationMatrix relation_span(int weight);

// Coefficients of 1/(1 - X^2 - X^3 - X^4 - X^5 + X^8 + ... + X^12).
int conjectured_dim(int weight);
// |compositions_ge2(weight)| - conjectured_dim(weight).
int conjectured_rel(int weight);

struct RelationTableRow {
  int weight;
  int dim_conj;
  int rel_conj;
  int rel_anti;
  int deficit;
};
std::vector<RelationTableRow> relation_table(int min_weight, int max_weight);
std::string relation_table_csv(const std::vector<RelationTableRow>& rows);

// |LHS - RHS| of the MZV identity obtained from the q -> 0 limit of the
// reduction formula, at the given number of digits.
double mzv_relation_residual(const Index& index, int precision = 12);

// |LHS - RHS| of the relation from the z^m coefficient, m > 0, with numerical
// G~ and G at tau.
double eisenstein_relation_residual(const Index& index, int m, const ModularPoint& tau, const EvalConfig& cfg = {});

// Numerical value of a combination of G~ symbols at tau.
Complex evaluate_relation(const Combination& relation, const ModularPoint& tau, const EvalConfig& cfg = {});

}  // namespace mwp
