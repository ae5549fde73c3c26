#ifndef WEYLTASEP_WEYL_HPP
#define WEYLTASEP_WEYL_HPP

#include <string>
#include <vector>

namespace wt {

// Root-system flavours. CDual and BDual share the roots of C and B but carry
// the Kac labels of the dual affine diagram.
enum class WeylKind { B, C, D, CDual, BDual };

WeylKind parse_kind(const std::string& name);
std::string kind_name(WeylKind kind);
void validate_kind(WeylKind kind, int n);

// Window notation: w[i-1] = w(i), entries a signed permutation of 1..n.
using SignedPerm = std::vector<int>;
using IntVector = std::vector<int>;

bool is_signed_perm(const SignedPerm& w);
void require_signed_perm(const SignedPerm& w);
bool in_group(WeylKind kind, const SignedPerm& w);

SignedPerm identity_perm(int n);
// (a o b)(i) = a(b(i)), extended by a(-i) = -a(i).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& w);

// w . e_i = e_{w^{-1}(i)}, so component j of w . x is sign(w_j) x_{|w_j|}.
// Note act(a, act(b, x)) == act(compose(b, a), x).
template <class T>
std::vector<T> act(const SignedPerm& w, const std::vector<T>& x)
{
    require_signed_perm(w);
    std::vector<T> out(x.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        int v = w[j];
        out[j] = v > 0 ? x[static_cast<std::size_t>(v - 1)] : -x[static_cast<std::size_t>(-v - 1)];
    }
    return out;
}

struct RootData {
    WeylKind kind;
    int n;
    std::vector<IntVector> positive_roots;
    std::vector<IntVector> simple_roots; // alpha_0 .. alpha_{n-1}
    IntVector theta;
    std::vector<int> kac;               // a_0 .. a_n, a_n belongs to theta
};

RootData root_data(WeylKind kind, int n);

bool is_positive_root(const IntVector& v);
int length(WeylKind kind, const SignedPerm& w);

// g in 0..n-1 is the simple reflection s_g, g == n is r_theta.
SignedPerm apply_generator(WeylKind kind, const SignedPerm& w, int g);

bool theta_raises(WeylKind kind, const SignedPerm& w);
IntVector inverse_act_theta(WeylKind kind, const SignedPerm& w);
IntVector positive_root_sum(WeylKind kind, int n);

// Every element of the finite Weyl group, D restricted to even sign changes.
std::vector<SignedPerm> enumerate_group(WeylKind kind, int n);

} // namespace wt

#endif
