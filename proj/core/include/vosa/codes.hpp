#pragma once

#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace vosa {

// A codeword over F_q with entries stored as 0..q-1.  For q = 3 the entry 2
// stands for -1.
using Word = std::vector<int>;

Word add_words(const Word& a, const Word& b, int q);
Word scale_word(const Word& a, int s, int q);
int weight(const Word& w);
// Sum of a_i b_i reduced mod q.
int dot_mod(const Word& a, const Word& b, int q);
// Rank over F_q (q prime) by Gaussian elimination.
int rank_mod(std::vector<Word> rows, int q);

struct BinaryCode {
  int length = 0;
  std::vector<Word> words;  // sorted, contains the zero word
  bool contains(const Word& w) const;
};

struct DCodeFamily {
  BinaryCode code;
  std::array<Word, 4> glue;  // the words labelled [0], [1], [2], [3]
};

// Words of length 2n with c_i = c_{n+i} and weight divisible by 4, plus the
// four standard coset representatives.
DCodeFamily d_code_family(int n);
// The coset code + glue[i] as a sorted word list.
std::vector<Word> d_code_coset(const DCodeFamily& f, int i);

struct TernaryCode {
  int length = 0;
  std::vector<Word> generators;

  int dimension() const { return rank_mod(generators, 3); }
  // Every codeword, sorted lexicographically.
  std::vector<Word> words() const;
  bool contains(const Word& w) const;
};

// Extended quadratic-residue code of length 12, with coordinate signs
// flipped so that the all-ones word is a codeword.
TernaryCode golay12();
TernaryCode permute_code(const TernaryCode& c, const std::vector<int>& perm);
// Coordinate order (new position j holds old coordinate perm[j]) under
// which (+^6 -^6) is a codeword.
std::vector<int> split_permutation(const TernaryCode& c);
std::map<int, std::int64_t> weight_distribution(const TernaryCode& c);
int minimum_weight(const TernaryCode& c);
bool self_orthogonal(const TernaryCode& c);

// The twelve vectors with entries +-1/2 read off from the eleven
// weight-12 words that start with +1 and carry six -1 entries, followed
// by the all-ones word.  Gram matrix 3 * identity.
std::vector<RVec> golay_lambda_basis(const TernaryCode& g);
// Codewords used to build the basis above, in the same order.
std::vector<Word> golay_lambda_words(const TernaryCode& g);

// Target coordinate j of the image carries sign[j] * (source coordinate
// perm[j]).
struct MonomialMap {
  std::vector<int> perm;
  std::vector<int> sign;  // +1 or -1
  Word apply(const Word& w) const;
};
// Searches for a monomial map sending the codewords of `from` onto those of
// `to`.  The first `pinned` target coordinates are matched to the same
// source coordinates (only their signs are searched), which is a valid
// normalization when the monomial automorphism group of `from` acts
// transitively on ordered tuples of that length; pinned = 0 searches the
// whole space.  Any returned map is verified exactly.
std::optional<MonomialMap> find_monomial_map(const TernaryCode& from, const TernaryCode& to, int pinned = 0);

// Complete weight enumerator.  Exponents are (a0', a+', a-', a0'', a+'',
// a-'').  Unmarked enumerators put the whole count in the primed slots.
struct MarkedEnumerator {
  std::map<std::array<int, 6>, std::int64_t> coeffs;
  std::int64_t coeff(const std::array<int, 6>& e) const;
  std::int64_t total() const;
};
MarkedEnumerator weight_enumerator(const TernaryCode& c, bool marked);

void to_json(nlohmann::json& j, const BinaryCode& c);
void to_json(nlohmann::json& j, const TernaryCode& c);

}  // namespace vosa
