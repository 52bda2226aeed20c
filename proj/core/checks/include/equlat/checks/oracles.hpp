#pragma once

// Brute-force reference implementations. Each one follows a definition
// directly and shares no code with the operation it checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "equlat/dfa.hpp"
#include "equlat/natural.hpp"
#include "equlat/partition.hpp"

namespace equlat::oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix matrix_of(const Partition& e);
// Classes read off a relation matrix: x's label is the least y with m[y][x].
Partition partition_of(const Matrix& m);

// x ~ y iff related in both.
Partition meet(const Partition& e, const Partition& f);

// x ~ y iff some finite sequence x = a_1, ..., a_k = y has each consecutive
// pair related in e or in f. Computed as the reflexive-transitive closure of
// e ∪ f by repeated squaring of the relation matrix.
Partition chain_closure_join(const Partition& e, const Partition& f);

bool is_complement(const Partition& e, const Partition& f);

// Non-singleton class built from a label table, not through Partition::singular.
Partition singular(std::size_t n, std::span<const std::size_t> members);

// Relation matrix of a DFA on pair words: m[a][b] = accepts(binrep a □ binrep b).
Matrix dfa_matrix(const Dfa& d, std::size_t bound);
bool reflexive(const Matrix& m);
bool symmetric(const Matrix& m);
bool transitive(const Matrix& m);

// Components of the undirected graph on `points` with an edge wherever
// `edge` holds in either direction; returns the component id of each point.
std::vector<std::size_t> components(std::span<const Natural> points,
                                    const std::function<bool(const Natural&, const Natural&)>& edge);

}  // namespace equlat::oracle
