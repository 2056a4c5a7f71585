#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "../tensor/tensor.hpp"

namespace trifocal {

class DegenerateConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <ExactField F>
std::vector<F> cross(const std::vector<F>& u, const std::vector<F>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// u and v span at most a line: every 2x2 minor of the stacked pair vanishes.
template <ExactField F>
bool proportional(const std::vector<F>& u, const std::vector<F>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (!(u[a] * v[b] - u[b] * v[a]).is_zero()) return false;
    return true;
}

template <ExactField F>
bool is_zero_vector(const std::vector<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <ExactField F>
class Camera {
public:
    explicit Camera(DenseMatrix<F> m) : m_(std::move(m)) {
        if (m_.rows() != 3 || m_.cols() != 4) throw std::invalid_argument("camera must be 3x4");
        if (rank(m_) != 3) throw DegenerateConfiguration("invalid camera: rank < 3");
    }
    const DenseMatrix<F>& matrix() const { return m_; }
    std::vector<F> row(std::size_t i) const { return m_.row(i); }

private:
    DenseMatrix<F> m_;
};

template <ExactField F>
std::vector<F> focal_point(const Camera<F>& a) {
    auto k = kernel_basis(a.matrix());
    if (k.size() != 1) throw DegenerateConfiguration("invalid camera: kernel is not a point");
    return k.front();
}

template <ExactField F>
struct CameraTriple {
    Camera<F> A1, A2, A3;
    const Camera<F>& operator[](std::size_t i) const { return i == 0 ? A1 : i == 1 ? A2 : A3; }
};

// The stacked 4x9 matrix (A1^T | A2^T | A3^T).
template <ExactField F>
DenseMatrix<F> stacked(const CameraTriple<F>& ct) {
    return ct.A1.matrix().transpose().hconcat(ct.A2.matrix().transpose()).hconcat(ct.A3.matrix().transpose());
}

template <ExactField F>
void validate(const CameraTriple<F>& ct) {
    if (rank(stacked(ct)) != 4) throw DegenerateConfiguration("degenerate configuration: stacked 4x9 matrix has rank < 4");
    std::array<std::vector<F>, 3> f = {focal_point(ct.A1), focal_point(ct.A2), focal_point(ct.A3)};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (proportional(f[a], f[b]))
                throw DegenerateConfiguration("degenerate configuration: focal points " + std::to_string(a + 1) +
                                              " and " + std::to_string(b + 1) + " coincide");
}

// T_ijk = sum_{c<d} eps(k,c,d) det[A1_i; A2_j; A3_c; A3_d].
template <ExactField F>
Tensor333<F> trifocal_from_cameras(const CameraTriple<F>& ct) {
    validate(ct);
    const F zero = ct.A1.matrix().zero();
    Tensor333<F> t(zero);
    static constexpr std::array<std::array<int, 3>, 3> kcd = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (const auto& [k, c0, d0] : kcd) {
                int c = std::min(c0, d0), d = std::max(c0, d0);
                // eps(k,c,d) for c<d: +1 when (k,c,d) is an even permutation
                int sign = (c0 < d0) ? 1 : -1;
                auto m = DenseMatrix<F>::from_rows(
                    {ct.A1.row(i), ct.A2.row(j), ct.A3.row(static_cast<std::size_t>(c)), ct.A3.row(static_cast<std::size_t>(d))});
                F v = det(m);
                t(i, j, static_cast<std::size_t>(k)) = sign > 0 ? v : -v;
            }
    if (t.is_zero()) throw DegenerateConfiguration("degenerate configuration: zero tensor");
    return t;
}

// l3 from the back-projected planes of l1 and l2, without the tensor.
template <ExactField F>
std::vector<F> transfer_geometric(const CameraTriple<F>& ct, const std::vector<F>& l1, const std::vector<F>& l2) {
    if (l1.size() != 3 || l2.size() != 3) throw std::invalid_argument("lines must be 3-vectors");
    auto p1 = ct.A1.matrix().transpose() * l1;
    auto p2 = ct.A2.matrix().transpose() * l2;
    auto planes = DenseMatrix<F>::from_rows({p1, p2});
    if (rank(planes) != 2) throw DegenerateConfiguration("degenerate transfer: back-projected planes are dependent");
    auto line = kernel_basis(planes);
    auto x1 = ct.A3.matrix() * line[0];
    auto x2 = ct.A3.matrix() * line[1];
    auto l3 = cross(x1, x2);
    if (is_zero_vector(l3)) throw DegenerateConfiguration("degenerate transfer: line passes through the third focal point");
    return l3;
}

template <ExactField F>
CameraTriple<F> random_camera_triple(std::mt19937_64& rng, int bound = 5, const F& zero = F{}) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        try {
            CameraTriple<F> ct{Camera<F>(random_int_matrix(rng, 3, 4, bound, zero)),
                               Camera<F>(random_int_matrix(rng, 3, 4, bound, zero)),
                               Camera<F>(random_int_matrix(rng, 3, 4, bound, zero))};
            validate(ct);
            return ct;
        } catch (const DegenerateConfiguration&) {
        }
    }
    throw std::runtime_error("could not draw a valid camera triple");
}

}  // namespace trifocal
