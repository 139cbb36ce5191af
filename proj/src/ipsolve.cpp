#include "mcsolve/ipsolve.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mcs {

int BoundedIntegerProgram::add_variable(long long lower, long long upper, std::string name)
{
    if (lower > upper)
        throw ContractError("variable with empty domain");
    const int id = variables();
    lower_.push_back(lower);
    upper_.push_back(upper);
    names_.push_back(name.empty() ? "x" + std::to_string(id) : std::move(name));
    linear_.push_back(0);
    return id;
}

void BoundedIntegerProgram::add_le(std::vector<LinearTerm> terms, long long rhs)
{
    for (const auto& t : terms)
        if (t.var < 0 || t.var >= variables())
            throw ContractError("constraint refers to an unknown variable");
    constraints_.push_back({std::move(terms), rhs});
}

void BoundedIntegerProgram::add_ge(std::vector<LinearTerm> terms, long long rhs)
{
    for (auto& t : terms)
        t.coef = -t.coef;
    add_le(std::move(terms), -rhs);
}

void BoundedIntegerProgram::add_eq(std::vector<LinearTerm> terms, long long rhs)
{
    add_le(terms, rhs);
    add_ge(std::move(terms), rhs);
}

void BoundedIntegerProgram::add_linear(int var, long long coef)
{
    linear_.at(var) += coef;
}

void BoundedIntegerProgram::add_quadratic(int i, int j, long long coef)
{
    if (i < 0 || j < 0 || i >= variables() || j >= variables())
        throw ContractError("quadratic term refers to an unknown variable");
    if (i > j)
        std::swap(i, j);
    for (auto& q : quadratic_)
        if (q.i == i && q.j == j) {
            q.coef += coef;
            return;
        }
    quadratic_.push_back({i, j, coef});
}

void BoundedIntegerProgram::add_symmetric(int i, int j, long long coef)
{
    add_quadratic(i, j, i == j ? coef : 2 * coef);
}

long long BoundedIntegerProgram::objective(const std::vector<long long>& x) const
{
    long long v = 0;
    for (int i = 0; i < variables(); ++i)
        v += linear_[i] * x[i];
    for (const auto& q : quadratic_)
        v += q.coef * x[q.i] * x[q.j];
    return v;
}

bool BoundedIntegerProgram::feasible(const std::vector<long long>& x) const
{
    for (int i = 0; i < variables(); ++i)
        if (x[i] < lower_[i] || x[i] > upper_[i])
            return false;
    for (const auto& c : constraints_) {
        long long act = 0;
        for (const auto& t : c.terms)
            act += t.coef * x[t.var];
        if (act > c.rhs)
            return false;
    }
    return true;
}

std::string BoundedIntegerProgram::dump() const
{
    std::ostringstream out;
    auto term = [&](long long coef, const std::string& body) {
        out << ' ' << (coef < 0 ? '-' : '+') << (coef < 0 ? -coef : coef) << ' ' << body;
    };
    for (int i = 0; i < variables(); ++i)
        out << "var " << names_[i] << " [" << lower_[i] << "," << upper_[i] << "]\n";
    out << "max:";
    for (int i = 0; i < variables(); ++i)
        if (linear_[i] != 0)
            term(linear_[i], names_[i]);
    for (const auto& q : quadratic_)
        term(q.coef, names_[q.i] + "*" + names_[q.j]);
    out << "\n";
    for (size_t k = 0; k < constraints_.size(); ++k) {
        out << "c" << k << ":";
        for (const auto& t : constraints_[k].terms)
            term(t.coef, names_[t.var]);
        out << " <= " << constraints_[k].rhs << "\n";
    }
    return out.str();
}

namespace {

    long long floor_div(long long a, long long b)
    {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0)))
            --q;
        return q;
    }

    long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

    struct Search
    {
        const BoundedIntegerProgram& p;
        long long cap;
        long long nodes = 0;
        bool found = false;
        long long best = 0;
        std::vector<long long> best_x;

        // Tightens the box; false when some constraint cannot be met.
        bool propagate(std::vector<long long>& lo, std::vector<long long>& hi) const
        {
            for (int round = 0; round < 64; ++round) {
                bool changed = false;
                for (const auto& c : p.constraints()) {
                    long long minact = 0;
                    for (const auto& t : c.terms)
                        minact += t.coef > 0 ? t.coef * lo[t.var] : t.coef * hi[t.var];
                    if (minact > c.rhs)
                        return false;
                    for (const auto& t : c.terms) {
                        if (t.coef > 0) {
                            long long slack = c.rhs - minact + t.coef * lo[t.var];
                            long long bound = floor_div(slack, t.coef);
                            if (bound < hi[t.var]) {
                                hi[t.var] = bound;
                                changed = true;
                            }
                        } else if (t.coef < 0) {
                            long long slack = c.rhs - minact + t.coef * hi[t.var];
                            long long bound = ceil_div(slack, t.coef);
                            if (bound > lo[t.var]) {
                                lo[t.var] = bound;
                                changed = true;
                            }
                        }
                        if (lo[t.var] > hi[t.var])
                            return false;
                    }
                }
                if (!changed)
                    return true;
            }
            return true;
        }

        long long upper_bound(const std::vector<long long>& lo, const std::vector<long long>& hi) const
        {
            long long ub = 0;
            const auto& c = p.linear();
            for (int i = 0; i < p.variables(); ++i)
                ub += std::max(c[i] * lo[i], c[i] * hi[i]);
            for (const auto& q : p.quadratic()) {
                if (q.i == q.j) {
                    long long a = lo[q.i], b = hi[q.i];
                    long long top = std::max(a * a, b * b);
                    long long bottom = (a <= 0 && b >= 0) ? 0 : std::min(a * a, b * b);
                    ub += q.coef > 0 ? q.coef * top : q.coef * bottom;
                } else {
                    long long best_corner = q.coef * lo[q.i] * lo[q.j];
                    for (long long x : {lo[q.i], hi[q.i]})
                        for (long long y : {lo[q.j], hi[q.j]})
                            best_corner = std::max(best_corner, q.coef * x * y);
                    ub += best_corner;
                }
            }
            return ub;
        }

        bool box_feasible(const std::vector<long long>& lo, const std::vector<long long>& hi) const
        {
            for (const auto& c : p.constraints()) {
                long long maxact = 0;
                for (const auto& t : c.terms)
                    maxact += t.coef > 0 ? t.coef * hi[t.var] : t.coef * lo[t.var];
                if (maxact > c.rhs)
                    return false;
            }
            return true;
        }

        void offer(const std::vector<long long>& x)
        {
            long long v = p.objective(x);
            if (!found || v > best) {
                found = true;
                best = v;
                best_x = x;
            }
        }

        void run(std::vector<long long> lo, std::vector<long long> hi)
        {
            if (++nodes > cap)
                throw ResourceError("integer program exceeded " + std::to_string(cap) + " nodes");
            if (!propagate(lo, hi))
                return;
            if (found && upper_bound(lo, hi) <= best)
                return;
            int widest = -1;
            for (int i = 0; i < p.variables(); ++i)
                if (hi[i] > lo[i] && (widest < 0 || hi[i] - lo[i] > hi[widest] - lo[widest]))
                    widest = i;
            if (widest < 0) {
                offer(lo);
                return;
            }
            if (p.quadratic().empty() && box_feasible(lo, hi)) {
                std::vector<long long> x(lo);
                for (int i = 0; i < p.variables(); ++i)
                    if (p.linear()[i] > 0)
                        x[i] = hi[i];
                offer(x);
                return;
            }
            const long long mid = lo[widest] + (hi[widest] - lo[widest]) / 2;
            {
                auto h2 = hi;
                h2[widest] = mid;
                run(lo, std::move(h2));
            }
            lo[widest] = mid + 1;
            run(std::move(lo), std::move(hi));
        }
    };

} // namespace

IpResult solve_ip(const BoundedIntegerProgram& p, long long node_cap)
{
    Search s{p, node_cap, 0, false, 0, {}};
    s.run(p.lower(), p.upper());
    IpResult r;
    r.feasible = s.found;
    r.nodes = s.nodes;
    if (s.found) {
        r.value = s.best;
        r.x = std::move(s.best_x);
    }
    return r;
}

} // namespace mcs
