#pragma once

#include <span>
#include <string>
#include <vector>

#include "garside/braid_word.hpp"
#include "garside/conjugacy.hpp"
#include "garside/normal_form.hpp"
#include "garside/permutation.hpp"

// The five-strand pseudo-Anosov family psi_k = delta_3^{3k+1} s_4^{2k+2}
// s_3 s_4^{2k-1} (k >= 2), its rigid conjugate beta_k, and the
// exponentially many super summit witnesses built from the atoms a_ij.
namespace garside::family {

inline constexpr int kStrands = 5;

/// One of the four three-strand atoms a_ij, i, j in {1, 2}.
struct Atom {
  int i;
  int j;
};

BraidWord atom_word(const Atom& a);
PermutationBraid atom(const Atom& a);

BraidWord psi_word(int k);
BraidWord tau_conjugator_word(int k);

NormalForm psi(int k);
NormalForm beta(int k);
NormalForm tau_conjugator(int k);

/// Factor lists written out from the closed-form expressions.
std::vector<PermutationBraid> psi_expected_factors(int k);
std::vector<PermutationBraid> beta_expected_factors(int k);

/// The conjugator a_{1,i_1} a_{i_1,i_2} ... a_{i_{2k-3},i_{2k-2}}.
NormalForm witness_conjugator(int k, std::span<const int> bits);
/// psi_k conjugated by witness_conjugator(k, bits).
NormalForm psi_variant(int k, std::span<const int> bits);
/// (D_3 s_4)^2, the twisted left complements of the atoms times s_4 (last
/// atom first), delta_3 s_4 s_3 s_4, s_3 s_4 a_1, then s_4 a_t.
std::vector<PermutationBraid> psi_variant_expected_factors(int k, std::span<const int> bits);

/// All 2^{2k-2} bit sequences in lexicographic order.
std::vector<std::vector<int>> all_bit_sequences(int k);

/// The 2^{2k-2} variants, checked pairwise distinct and of canonical length
/// 4k-1; sorted canonically. Throws std::logic_error if a check fails.
std::vector<NormalForm> sss_witnesses(int k);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FamilyReport {
  int k = 0;
  std::vector<Check> checks;

  bool pass() const;
};

struct VerifyOptions {
  EnumerateOptions enumeration;
  /// Cross-check the witnesses against a full SSS enumeration. Defaults to
  /// on for k = 2 only.
  std::optional<bool> enumerate_sss;
  int jobs = 1;
};

/// Runs every family check and records the outcomes; individual failures
/// do not throw. Throws std::domain_error for k < 2.
FamilyReport verify_paper(int k, const VerifyOptions& options = {});

}  // namespace garside::family
