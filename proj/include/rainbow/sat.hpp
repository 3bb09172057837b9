#pragma once

#include <array>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Exact-3SAT formula: every clause holds exactly three literals over three
/// distinct variables. Literals are signed 1-based variable indices.
struct CnfFormula {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Total truth assignment; value[i] is the value of variable i+1.
struct SatAssignment {
    std::vector<bool> value;
};

inline bool satisfies(const CnfFormula& formula, const SatAssignment& eval)
{
    if (static_cast<int>(eval.value.size()) != formula.variables)
        throw std::invalid_argument("assignment: wrong variable count");
    for (const auto& clause : formula.clauses) {
        bool sat = false;
        for (int lit : clause)
            if (eval.value[std::abs(lit) - 1] == (lit > 0)) {
                sat = true;
                break;
            }
        if (!sat)
            return false;
    }
    return true;
}

/// Exhaustive satisfiability probe for small formulas.
inline std::optional<SatAssignment> brute_force_sat(const CnfFormula& formula)
{
    if (formula.variables > 25)
        throw capacity_error("brute_force_sat: too many variables");
    SatAssignment eval;
    eval.value.assign(formula.variables, false);
    for (long long bits = 0; bits < (1LL << formula.variables); ++bits) {
        for (int i = 0; i < formula.variables; ++i)
            eval.value[i] = (bits >> i) & 1;
        if (satisfies(formula, eval))
            return eval;
    }
    return std::nullopt;
}

namespace detail {

inline void check_clause(const std::vector<int>& lits, int variables, int lineno)
{
    auto where = "line " + std::to_string(lineno);
    if (lits.size() != 3)
        throw parse_error(where + ": clause must have exactly 3 literals");
    for (int lit : lits) {
        int var = std::abs(lit);
        if (var < 1 || var > variables)
            throw parse_error(where + ": literal " + std::to_string(lit) + " out of range");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(lits[i]) == std::abs(lits[j]))
                throw parse_error(where + ": clause variables must be distinct");
}

}  // namespace detail

/// DIMACS CNF, restricted to exactly-3-distinct-variable clauses. Clauses
/// may span lines and are 0-terminated as usual.
inline CnfFormula parse_dimacs(std::istream& in)
{
    CnfFormula formula;
    int declared_clauses = -1;
    std::string raw;
    int lineno = 0;
    std::vector<int> pending;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.empty() || raw[0] == 'c')
            continue;
        std::istringstream iss(raw);
        if (raw[0] == 'p') {
            std::string p, cnf;
            if (!(iss >> p >> cnf >> formula.variables >> declared_clauses) || cnf != "cnf"
                || formula.variables < 0 || declared_clauses < 0)
                throw parse_error("line " + std::to_string(lineno)
                                  + ": expected header 'p cnf <vars> <clauses>'");
            continue;
        }
        if (declared_clauses < 0)
            throw parse_error("line " + std::to_string(lineno) + ": clause before header");
        int lit;
        while (iss >> lit) {
            if (lit == 0) {
                detail::check_clause(pending, formula.variables, lineno);
                formula.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
        if (!iss.eof())
            throw parse_error("line " + std::to_string(lineno) + ": bad literal token");
    }
    if (declared_clauses < 0)
        throw parse_error("missing 'p cnf' header");
    if (!pending.empty())
        throw parse_error("unterminated clause at end of input");
    if (static_cast<int>(formula.clauses.size()) != declared_clauses)
        throw parse_error("declared " + std::to_string(declared_clauses)
                          + " clauses but found " + std::to_string(formula.clauses.size()));
    return formula;
}

inline void write_dimacs(std::ostream& out, const CnfFormula& formula)
{
    out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
    for (const auto& clause : formula.clauses)
        out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << " 0\n";
}

/// Assignment file: whitespace-separated signed variable indices, +i for
/// true and -i for false, each variable exactly once.
inline SatAssignment parse_assignment(std::istream& in, const CnfFormula& formula)
{
    SatAssignment eval;
    eval.value.assign(formula.variables, false);
    std::vector<bool> seen(formula.variables, false);
    int lit;
    while (in >> lit) {
        int var = std::abs(lit);
        if (var < 1 || var > formula.variables)
            throw parse_error("assignment: variable " + std::to_string(var) + " out of range");
        if (seen[var - 1])
            throw parse_error("assignment: variable " + std::to_string(var) + " set twice");
        seen[var - 1] = true;
        eval.value[var - 1] = lit > 0;
    }
    for (int i = 0; i < formula.variables; ++i)
        if (!seen[i])
            throw parse_error("assignment: variable " + std::to_string(i + 1) + " missing");
    return eval;
}

inline void write_assignment(std::ostream& out, const SatAssignment& eval)
{
    for (size_t i = 0; i < eval.value.size(); ++i)
        out << (eval.value[i] ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1))
            << (i + 1 < eval.value.size() ? ' ' : '\n');
    if (eval.value.empty())
        out << '\n';
}

}  // namespace rainbow
