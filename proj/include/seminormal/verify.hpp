#pragma once

#include "seminormal/hecke.hpp"
#include "seminormal/rep.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace seminormal {

struct Subject {
  GroupType group = GroupType::A;
  int n = 0;
  std::optional<std::string> shape; // label string when the check is per shape
  bool hecke = false;               // checked object lives in the Hecke algebra
};

/// Reproducible counterexample carried by failing checks.
struct Witness {
  std::string description;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check;
  Subject subject;
  bool pass = true;
  std::optional<Witness> witness;
};

/// Defining relations as exact matrix identities; Hecke quadratic relations
/// use p on short-root generators and q elsewhere.
CheckReport check_relations(const WeylRep& rep);
CheckReport check_relations(const HeckeRep& rep);

/// Jucys-Murphy / Murphy and central element matrices are diagonal with the
/// tabulated eigenvalues (factor-2 convention on the long flavor of B and D).
CheckReport check_jm_spectra(const WeylRep& rep);
CheckReport check_jm_spectra(const HeckeRep& rep);

/// Sum of squared dimensions equals |W| and character inner products over the
/// full enumeration are delta_{lambda,mu}.
CheckReport check_completeness(GroupType t, int n, std::size_t cap = 1000000);

/// Restriction along the chain is literally block diagonal with blocks equal
/// to the smaller seminormal representations. Types A, B and G2.
CheckReport check_branching(const WeylRep& rep);

/// Weights separate paths: injective for A/B/G2; fibers {L, sigma L} for D.
CheckReport check_weight_separation(GroupType t, int n);

/// Products of spectral projectors reproduce the elementary diagonal
/// idempotents (types A, B, G2), and each central-element matrix is constant
/// on branching blocks with the block's constant.
CheckReport check_projectors(const WeylRep& rep);

/// Proof-level identities: the type B step-2 identity (formal and matricial),
/// the Hecke B identities M_n = T_n M_{n-1} T_n and T_n^-1 = M_n^-1 T_n M_{n-1},
/// and the G2 proof equations.
CheckReport check_step2_identities(GroupType t, int n);

/// Entrywise p = q = 1 specialization of every Hecke matrix equals the Weyl
/// matrix (no poles).
CheckReport check_specialization(GroupType t, int n);

/// The three central-element specialization identities relating T_{w_k0} to
/// the reflection sums and to w_k0, per shape and level.
CheckReport check_central_specialization(GroupType t, int n);

/// central_matrix commutes with the level-k generator matrices, and the
/// square of T_{w_k0} acts as p^{2 c_s} q^{2 c_l} per branching block.
CheckReport check_centrality(const HeckeRep& rep);

/// The 36-entry WG2 character table on the six class representatives.
CheckReport check_g2_character_table();

inline const std::vector<std::string> kCheckNames = {
    "relations",  "jm-spectra", "completeness", "branching",  "weights",
    "projectors", "step2",      "specialize",   "prop28",     "centrality",
    "chartable"};

struct SuiteOptions {
  std::size_t group_cap = 1000000;   ///< maximum |W| for enumeration sweeps
  std::set<std::string> checks;      ///< subset of kCheckNames; empty = all
};

/// Runs every applicable check over all shapes of the given rank, in a
/// deterministic order. Throws CapError when |W| exceeds the cap.
std::vector<CheckReport> run_suite(GroupType t, int n, const SuiteOptions& opts = {});

} // namespace seminormal
