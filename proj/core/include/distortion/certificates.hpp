#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distortion/cayley.hpp"

namespace distortion::cayley {

/// Explicit distortion identities with word witnesses:
///   heisenberg   [g^n, h^n] = f^(n^2)                     length 4n
///   sl2          A^-n B A^n = B^(4^n)                       length 2n+1
///   polterovich  (A^-n B A^n)(A^n B A^-n) = B^m,
///                m = lambda^2n + lambda^-2n, lambda = 1+sqrt2 length 4n+2
///   mess         (A^-n T A^n)(A^n T A^-n) = T^(tr A^n)      length 4n+2
enum class Family { heisenberg, sl2, polterovich, mess };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct FamilyGroup {
    GeneratingSet generators;
    GroupElement distorted;
    std::string distorted_label;
};

/// heisenberg: g, h (f = [g,h]); sl2: A = diag(1/2, 2), B; polterovich: A = diag(lambda^-1, lambda),
/// B over Z[sqrt2]; mess: A = (1, 0), T = (0, 1) as Mess pairs.
FamilyGroup family_group(Family f);

struct Certificate {
    Family family;
    int n;
    Word word;
    BigInt power;           // claimed exponent m: the word equals distorted^m
    GroupElement claimed;   // distorted^m, computed by exact powering
    std::size_t length;     // claimed word length
};

Certificate certificate_witness(Family f, int n);

/// evaluate_word(witness) == claimed and |witness| == claimed length.
bool verify_certificate(const Certificate& c);

/// lambda^2n + lambda^-2n for lambda = 1 + sqrt 2, as an exact integer.
BigInt polterovich_power(int n);
/// tr A^n for the cat map A = [[2,1],[1,1]].
BigInt cat_map_trace(int n);

// ---- Distortion profiles ------------------------------------------------

enum class BfsStatus { found, not_found, unknown };

struct ProfileRow {
    BigInt n;
    std::string element_id;
    BfsStatus bfs_status = BfsStatus::unknown;
    std::optional<int> bfs_length;
    std::optional<std::size_t> certificate_length;
    std::optional<int> certificate_n;
    /// best upper bound on |g^n| divided by n; empty when no bound is known.
    std::optional<Rational> ratio;
};

struct DistortionProfile {
    std::vector<ProfileRow> rows;
    int max_radius = 0;
    int complete_radius = 0;
    std::size_t ball_size = 0;
};

/// One row per power. The ball is generated once to max_radius; when it hits the cap,
/// powers found in the partial ball keep exact lengths and the rest are marked unknown.
/// When `certificate` is set, a row whose power equals the family's claimed power for
/// some witness index gets that witness length as an upper bound.
DistortionProfile distortion_profile(const GeneratingSet& gens, const GroupElement& g,
                                     const std::vector<BigInt>& powers, int max_radius,
                                     std::optional<Family> certificate = std::nullopt,
                                     std::size_t element_cap = kDefaultElementCap);

// ---- Witte relations in SL(3, Z) ----------------------------------------

/// The six elementary matrices a_1..a_6 = I + k E_ij, (ij) = 12, 13, 23, 21, 31, 32.
std::vector<ExactMatrix> witte_generators(long k);

struct WitteReport {
    long k;
    int i;
    long m;
    long n;
    bool neighbors_commute;     // [a_i, a_{i+1}] = e
    bool commutator_matches;    // [a_{i-1}^m, a_{i+1}^n] = a_i^(sign m n k)
    int sign;                   // +1, -1, or 0 when neither matched
    long exponent;              // sign * m * n * k
    bool pass() const { return neighbors_commute && commutator_matches; }
};

/// Indices are taken mod 6 in 1..6.
WitteReport witte_relation_check(long k, int i, long m, long n);

}  // namespace distortion::cayley
