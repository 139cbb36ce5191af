#pragma once

#include <string>
#include <vector>

namespace mcs {

inline constexpr long long kDefaultIpNodeCap = 10'000'000;

struct LinearTerm
{
    int var;
    long long coef;
};

/// sum(coef * x[var]) <= rhs
struct LinearConstraint
{
    std::vector<LinearTerm> terms;
    long long rhs = 0;
};

struct QuadraticTerm
{
    int i, j; ///< i <= j
    long long coef;
};

/// Maximize sum(c_i x_i) + sum(q * x_i * x_j) over an integer box with
/// linear constraints.
class BoundedIntegerProgram
{
public:
    int add_variable(long long lower, long long upper, std::string name = {});

    void add_le(std::vector<LinearTerm> terms, long long rhs);
    void add_ge(std::vector<LinearTerm> terms, long long rhs);
    void add_eq(std::vector<LinearTerm> terms, long long rhs);

    void add_linear(int var, long long coef);
    /// Adds coef * x_i * x_j to the objective (i may equal j).
    void add_quadratic(int i, int j, long long coef);
    /// Symmetric table entry: x^T Q x gains coef for Q[i][j] and, when i != j, for Q[j][i].
    void add_symmetric(int i, int j, long long coef);

    int variables() const { return static_cast<int>(lower_.size()); }
    const std::vector<long long>& lower() const { return lower_; }
    const std::vector<long long>& upper() const { return upper_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }
    const std::vector<long long>& linear() const { return linear_; }
    const std::vector<QuadraticTerm>& quadratic() const { return quadratic_; }
    const std::string& name(int var) const { return names_[var]; }

    long long objective(const std::vector<long long>& x) const;
    bool feasible(const std::vector<long long>& x) const;

    /// One line per variable, the objective, then one line per constraint.
    std::string dump() const;

private:
    std::vector<long long> lower_, upper_;
    std::vector<std::string> names_;
    std::vector<LinearConstraint> constraints_;
    std::vector<long long> linear_;
    std::vector<QuadraticTerm> quadratic_;
};

struct IpResult
{
    bool feasible = false;
    long long value = 0;
    std::vector<long long> x;
    long long nodes = 0;
};

/// Exact branch and bound. Throws ResourceError after `node_cap` nodes.
IpResult solve_ip(const BoundedIntegerProgram& p, long long node_cap = kDefaultIpNodeCap);

} // namespace mcs
