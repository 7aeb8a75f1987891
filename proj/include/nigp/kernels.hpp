#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "nigp/linalg.hpp"
#include "nigp/rng.hpp"

namespace nigp {

// ARD squared-exponential kernel
//   k(x1,x2) = os * exp(-1/2 * sum_d ((x1_d - x2_d) / ls_d)^2)
// Hyperparameters are stored in log space so gradient steps keep them
// positive.
class RbfKernel {
public:
    RbfKernel(const Vector& lengthscales, double output_scale);
    static RbfKernel from_logs(Vector log_lengthscales, double log_output_scale);

    int dim() const { return static_cast<int>(log_ls_.size()); }
    double eval(const Vector& x1, const Vector& x2) const;
    Vector grad_x1(const Vector& x1, const Vector& x2) const;

    // log-space hyperparameter vector: [log ls_0 .. log ls_{d-1}, log os]
    int param_count() const { return dim() + 1; }
    Vector params() const;
    void set_params(const Vector& p);
    // value plus d(value)/d(log-param); grad must have param_count() entries
    double eval_with_param_grad(const Vector& x1, const Vector& x2,
                                Eigen::Ref<Vector> grad) const;

    Vector lengthscales() const { return log_ls_.array().exp(); }
    double output_scale() const { return std::exp(log_os_); }
    const Vector& log_lengthscales() const { return log_ls_; }
    double log_output_scale() const { return log_os_; }

    // squared scaled distance sum_d (delta_d / ls_d)^2
    double sqdist(const Vector& x1, const Vector& x2) const;

private:
    RbfKernel() = default;
    Vector log_ls_;
    double log_os_ = 0.0;
};

// Sum of 30 independent RBF components, k = k_1 + ... + k_30.
class SumRbfKernel {
public:
    static constexpr int kComponents = 30;

    explicit SumRbfKernel(std::vector<RbfKernel> components);
    // components drawn log-uniformly around (lengthscale, output_scale/30)
    static SumRbfKernel random_init(const Vector& lengthscale, double output_scale, Rng& rng);

    int dim() const { return components_[0].dim(); }
    double eval(const Vector& x1, const Vector& x2) const;
    Vector grad_x1(const Vector& x1, const Vector& x2) const;
    int param_count() const;
    Vector params() const;
    void set_params(const Vector& p);
    double eval_with_param_grad(const Vector& x1, const Vector& x2,
                                Eigen::Ref<Vector> grad) const;

    const std::vector<RbfKernel>& components() const { return components_; }

private:
    std::vector<RbfKernel> components_;
};

// k(x1,x2) = os * (k_RBF(x1,x2) / os)^alpha, i.e. the power is applied to
// the correlation part only, so the output scale keeps its meaning. alpha
// is a fixed tuning constant in (0.9, 2), never trained.
class PoweredRbfKernel {
public:
    PoweredRbfKernel(RbfKernel base, double alpha);

    int dim() const { return base_.dim(); }
    double eval(const Vector& x1, const Vector& x2) const;
    Vector grad_x1(const Vector& x1, const Vector& x2) const;
    int param_count() const { return base_.param_count(); }
    Vector params() const { return base_.params(); }
    void set_params(const Vector& p) { base_.set_params(p); }
    double eval_with_param_grad(const Vector& x1, const Vector& x2,
                                Eigen::Ref<Vector> grad) const;

    double alpha() const { return alpha_; }
    const RbfKernel& base() const { return base_; }

private:
    RbfKernel base_;
    double alpha_;
};

using Kernel = std::variant<RbfKernel, SumRbfKernel, PoweredRbfKernel>;

int kernel_dim(const Kernel& k);
double kernel_eval(const Kernel& k, const Vector& x1, const Vector& x2);
Vector kernel_grad_x1(const Kernel& k, const Vector& x1, const Vector& x2);
int kernel_param_count(const Kernel& k);
Vector kernel_params(const Kernel& k);
void set_kernel_params(Kernel& k, const Vector& p);
double kernel_eval_with_param_grad(const Kernel& k, const Vector& x1, const Vector& x2,
                                   Eigen::Ref<Vector> grad);
// k(x,x): the amplitude (os for RBF variants, sum of component os for the sum)
double kernel_amplitude(const Kernel& k);

// entry (i,j) = k(A.row(i), B.row(j))
Matrix gram(const Kernel& k, const Matrix& A, const Matrix& B);
// symmetric Gram of one point set (no jitter added here)
Matrix gram(const Kernel& k, const Matrix& A);

}  // namespace nigp
