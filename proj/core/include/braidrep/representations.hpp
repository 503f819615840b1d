#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/assignment.hpp"
#include "braidrep/permutation.hpp"

namespace braidrep {

enum class RepFamily : std::uint8_t { artin, rho_u, rho_w, rho_v, rho_d, iota_d };

std::string_view rep_family_name(RepFamily f); // "artin", "rho-u", ...
std::optional<RepFamily> rep_family_from_name(std::string_view name);

struct RepParams {
    RepFamily family = RepFamily::artin;
    int n = 2;
    int g = 0;
    int p = 1;
};

// Throws InvalidParameter when the parameters violate the family's preconditions.
void validate(const RepParams& params);
std::uint32_t target_rank(const RepParams& params);
std::string describe(const RepParams& params);
Assignment make_representation(const RepParams& params);

// Target bases.
const Alphabet& free_alphabet(int n);             // x_1..x_n
const Alphabet& u_alphabet(int n, int g, int p);  // tau_1..tau_{n-1}, w_1..w_{2g}, xi_1..xi_{p-1}
const Alphabet& w_alphabet(int n, int g, int p);  // tau_1..tau_{n-1}, w_1..w_g, xi_1..xi_{p-1}
const Alphabet& v_alphabet(int n, int g);         // tau_2..tau_{n-1}, w_1..w_{2g}

// B_n on F_n: σ_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.  Left action.
Assignment artin_rep(int n);
// B_{n-1}(Σ_{g,p}) on U_{n-1,g,p} by conjugation.  Right action.
Assignment rho_u(int n, int g, int p);
// B_{n-1}(N_{g,p}) on W_{n,g,p}.  Right action.
Assignment rho_w(int n, int g, int p);
// σ/x generators of the closed-surface presentation (TR5 removed) on V_{n-1,g}.  Right action.
Assignment rho_v(int n, int g);
Word tau1_word(int n, int g);
Report rho_v_outer_check(int n, int g);
// Same check against a supplied (possibly corrupted) rho_v assignment.
Report rho_v_outer_check(const Assignment& rv, int n, int g);
// B_n on F_{n-1}.  Left action.
Assignment rho_d(int n);
// A(D_n) on F_n.  Left action.
Assignment iota_d(int n);

// λ_1 = δ_1 δ_2^{-1}, λ_i = (δ_{i+1}...δ_3) λ_1 (δ_{i+1}...δ_3)^{-1}.
std::vector<Word> lambda_words(int n);
// δ_1, δ_2 -> σ_1, δ_i -> σ_{i-1}; word over the A(D_n) alphabet to one over B_n.
Word pi_d_word(const Word& u);
// σ_i -> δ_{i+1}; word over B_n to one over A(D_n).
Word s_d_word(const Word& u);

Word fixed_product_orientable(int n, int g, int p);
Word fixed_product_nonorientable(int n, int g, int p);
// x_1 x_2 ... x_n
Word generator_product(int n);
// (σ_1 ... σ_{n-1})^n
Word full_twist_word(int n);

struct ArtinCertificate {
    Permutation permutation;
    std::vector<Word> conjugators; // a_i with f(x_i) = a_i^{-1} x_{s(i)} a_i
};

struct ArtinCheck {
    std::optional<ArtinCertificate> certificate;
    std::string reason; // empty on acceptance
};

ArtinCheck artin_conditions(const FreeEndo& f, const Word& product);
std::optional<ArtinCertificate> artin_condition_check(const FreeEndo& f, const Word& product);

// The product each generator image must fix: x_1...x_n for artin, the
// orientable / non-orientable product for rho-u / rho-w.
Word fixed_product(const RepParams& params);

// Per-generator fixed-product report for rho-u / rho-w / artin.
Report fixed_product_report(const RepParams& params);

} // namespace braidrep
