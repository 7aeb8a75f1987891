#include "nigp/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nigp {

namespace {

void check_dims(int kernel_dim, const Vector& x1, const Vector& x2) {
    if (x1.size() != kernel_dim || x2.size() != kernel_dim) {
        throw std::invalid_argument("kernel dimension mismatch: kernel is " +
                                    std::to_string(kernel_dim) + "-dimensional, inputs are " +
                                    std::to_string(x1.size()) + " and " +
                                    std::to_string(x2.size()));
    }
}

}  // namespace

RbfKernel::RbfKernel(const Vector& lengthscales, double output_scale) {
    if (lengthscales.size() == 0) throw std::invalid_argument("RbfKernel: empty lengthscales");
    if ((lengthscales.array() <= 0.0).any())
        throw std::invalid_argument("RbfKernel: lengthscales must be positive");
    if (output_scale <= 0.0) throw std::invalid_argument("RbfKernel: output scale must be positive");
    log_ls_ = lengthscales.array().log();
    log_os_ = std::log(output_scale);
}

RbfKernel RbfKernel::from_logs(Vector log_lengthscales, double log_output_scale) {
    RbfKernel k;
    if (log_lengthscales.size() == 0) throw std::invalid_argument("RbfKernel: empty lengthscales");
    k.log_ls_ = std::move(log_lengthscales);
    k.log_os_ = log_output_scale;
    return k;
}

double RbfKernel::sqdist(const Vector& x1, const Vector& x2) const {
    check_dims(dim(), x1, x2);
    return ((x1 - x2).array() * (-log_ls_).array().exp()).square().sum();
}

double RbfKernel::eval(const Vector& x1, const Vector& x2) const {
    return std::exp(log_os_ - 0.5 * sqdist(x1, x2));
}

Vector RbfKernel::grad_x1(const Vector& x1, const Vector& x2) const {
    const double k = eval(x1, x2);
    return -k * ((x1 - x2).array() * (-2.0 * log_ls_).array().exp()).matrix();
}

Vector RbfKernel::params() const {
    Vector p(param_count());
    p.head(dim()) = log_ls_;
    p(dim()) = log_os_;
    return p;
}

void RbfKernel::set_params(const Vector& p) {
    if (p.size() != param_count()) throw std::invalid_argument("RbfKernel: bad parameter count");
    log_ls_ = p.head(dim());
    log_os_ = p(dim());
}

double RbfKernel::eval_with_param_grad(const Vector& x1, const Vector& x2,
                                       Eigen::Ref<Vector> grad) const {
    check_dims(dim(), x1, x2);
    const Eigen::ArrayXd scaled_sq =
        ((x1 - x2).array() * (-log_ls_).array().exp()).square();  // (delta_d / ls_d)^2
    const double k = std::exp(log_os_ - 0.5 * scaled_sq.sum());
    grad.head(dim()) = k * scaled_sq.matrix();  // d/d(log ls_d)
    grad(dim()) = k;                            // d/d(log os)
    return k;
}

SumRbfKernel::SumRbfKernel(std::vector<RbfKernel> components) : components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != kComponents)
        throw std::invalid_argument("SumRbfKernel: expected exactly " +
                                    std::to_string(kComponents) + " components, got " +
                                    std::to_string(components_.size()));
    for (const auto& c : components_)
        if (c.dim() != components_[0].dim())
            throw std::invalid_argument("SumRbfKernel: components disagree on dimension");
}

SumRbfKernel SumRbfKernel::random_init(const Vector& lengthscale, double output_scale, Rng& rng) {
    std::vector<RbfKernel> comps;
    comps.reserve(kComponents);
    for (int c = 0; c < kComponents; ++c) {
        const double ls_factor = rng.log_uniform(0.1, 10.0);
        const double os_factor = rng.log_uniform(0.1, 10.0);
        comps.emplace_back(Vector(ls_factor * lengthscale),
                           os_factor * output_scale / kComponents);
    }
    return SumRbfKernel(std::move(comps));
}

double SumRbfKernel::eval(const Vector& x1, const Vector& x2) const {
    double s = 0.0;
    for (const auto& c : components_) s += c.eval(x1, x2);
    return s;
}

Vector SumRbfKernel::grad_x1(const Vector& x1, const Vector& x2) const {
    Vector g = Vector::Zero(dim());
    for (const auto& c : components_) g += c.grad_x1(x1, x2);
    return g;
}

int SumRbfKernel::param_count() const {
    return kComponents * components_[0].param_count();
}

Vector SumRbfKernel::params() const {
    Vector p(param_count());
    int off = 0;
    for (const auto& c : components_) {
        p.segment(off, c.param_count()) = c.params();
        off += c.param_count();
    }
    return p;
}

void SumRbfKernel::set_params(const Vector& p) {
    if (p.size() != param_count()) throw std::invalid_argument("SumRbfKernel: bad parameter count");
    int off = 0;
    for (auto& c : components_) {
        c.set_params(p.segment(off, c.param_count()));
        off += c.param_count();
    }
}

double SumRbfKernel::eval_with_param_grad(const Vector& x1, const Vector& x2,
                                          Eigen::Ref<Vector> grad) const {
    double s = 0.0;
    int off = 0;
    for (const auto& c : components_) {
        s += c.eval_with_param_grad(x1, x2, grad.segment(off, c.param_count()));
        off += c.param_count();
    }
    return s;
}

PoweredRbfKernel::PoweredRbfKernel(RbfKernel base, double alpha)
    : base_(std::move(base)), alpha_(alpha) {
    if (!(alpha > 0.9 && alpha < 2.0))
        throw std::invalid_argument("PoweredRbfKernel: alpha must lie in (0.9, 2), got " +
                                    std::to_string(alpha));
}

// os * (exp(-q/2))^alpha == os * exp(-alpha q / 2): one exp, and alpha = 1
// reproduces the plain RBF expression exactly.
double PoweredRbfKernel::eval(const Vector& x1, const Vector& x2) const {
    return std::exp(base_.log_output_scale() - 0.5 * alpha_ * base_.sqdist(x1, x2));
}

Vector PoweredRbfKernel::grad_x1(const Vector& x1, const Vector& x2) const {
    const double k = eval(x1, x2);
    return -alpha_ * k *
           ((x1 - x2).array() * (-2.0 * base_.log_lengthscales()).array().exp()).matrix();
}

double PoweredRbfKernel::eval_with_param_grad(const Vector& x1, const Vector& x2,
                                              Eigen::Ref<Vector> grad) const {
    const int d = dim();
    const double k_base = base_.eval_with_param_grad(x1, x2, grad);
    const double r = k_base / base_.output_scale();
    const double k = base_.output_scale() * std::pow(r, alpha_);
    // base grad wrt log ls_d is k_base * sq_d; rescale to the powered value
    grad.head(d) *= alpha_ * k / k_base;
    grad(d) = k;  // power applies to the correlation only
    return k;
}

int kernel_dim(const Kernel& k) {
    return std::visit([](const auto& kk) { return kk.dim(); }, k);
}

double kernel_eval(const Kernel& k, const Vector& x1, const Vector& x2) {
    return std::visit([&](const auto& kk) { return kk.eval(x1, x2); }, k);
}

Vector kernel_grad_x1(const Kernel& k, const Vector& x1, const Vector& x2) {
    return std::visit([&](const auto& kk) { return kk.grad_x1(x1, x2); }, k);
}

int kernel_param_count(const Kernel& k) {
    return std::visit([](const auto& kk) { return kk.param_count(); }, k);
}

Vector kernel_params(const Kernel& k) {
    return std::visit([](const auto& kk) { return kk.params(); }, k);
}

void set_kernel_params(Kernel& k, const Vector& p) {
    std::visit([&](auto& kk) { kk.set_params(p); }, k);
}

double kernel_eval_with_param_grad(const Kernel& k, const Vector& x1, const Vector& x2,
                                   Eigen::Ref<Vector> grad) {
    return std::visit([&](const auto& kk) { return kk.eval_with_param_grad(x1, x2, grad); }, k);
}

double kernel_amplitude(const Kernel& k) {
    if (const auto* s = std::get_if<SumRbfKernel>(&k)) {
        double a = 0.0;
        for (const auto& c : s->components()) a += c.output_scale();
        return a;
    }
    if (const auto* r = std::get_if<RbfKernel>(&k)) return r->output_scale();
    return std::get<PoweredRbfKernel>(k).base().output_scale();
}

Matrix gram(const Kernel& k, const Matrix& A, const Matrix& B) {
    const int d = kernel_dim(k);
    if (A.cols() != d || B.cols() != d)
        throw std::invalid_argument("gram: input dimension mismatch: kernel is " +
                                    std::to_string(d) + "-dimensional, inputs have " +
                                    std::to_string(A.cols()) + " and " +
                                    std::to_string(B.cols()) + " columns");
    Matrix K(A.rows(), B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < B.rows(); ++j)
            K(i, j) = kernel_eval(k, A.row(i), B.row(j));
    return K;
}

Matrix gram(const Kernel& k, const Matrix& A) {
    const int d = kernel_dim(k);
    if (A.cols() != d)
        throw std::invalid_argument("gram: input dimension mismatch: kernel is " +
                                    std::to_string(d) + "-dimensional, inputs have " +
                                    std::to_string(A.cols()) + " columns");
    Matrix K(A.rows(), A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            K(i, j) = kernel_eval(k, A.row(i), A.row(j));
            K(j, i) = K(i, j);
        }
    }
    return K;
}

}  // namespace nigp
