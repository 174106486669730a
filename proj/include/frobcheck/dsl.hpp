#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobcheck/rational.hpp"
#include "frobcheck/report.hpp"

namespace frobcheck {

// Row-major matrix literal, dimensions declared up front ("2x3").
struct MatrixLit {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> entries;
    bool operator==(const MatrixLit&) const = default;
};

// head(arg, ...) where each argument is a bound name, an integer, a
// rational, or a component slot; kept as raw tokens until binding time.
struct CtorExpr {
    std::string head;
    std::vector<std::string> args;
    bool operator==(const CtorExpr&) const = default;
};

struct BindingDecl {
    std::string kind;  // matrix | base | frobalg | dual | functor | transf
    std::string name;
    std::variant<MatrixLit, CtorExpr> value;
    int line = 0;

    // line numbers are positional bookkeeping, not model content
    bool operator==(const BindingDecl& o) const {
        return kind == o.kind && name == o.name && value == o.value;
    }
};

struct DirectiveDecl {
    std::string verb;  // a check sub-verb, or transport_dual | tensor | compose
    std::vector<std::string> args;
    size_t grid_lo = 0;  // both 0 when the directive carries no grid clause
    size_t grid_hi = 0;
    std::optional<bool> expect_split;
    bool mirrored = false;
    int line = 0;

    bool operator==(const DirectiveDecl& o) const {
        return verb == o.verb && args == o.args && grid_lo == o.grid_lo &&
               grid_hi == o.grid_hi && expect_split == o.expect_split &&
               mirrored == o.mirrored;
    }
};

using Statement = std::variant<BindingDecl, DirectiveDecl>;

struct SpecModel {
    std::vector<Statement> statements;
    bool operator==(const SpecModel&) const = default;
};

// Line-oriented format: `# comment`, `matrix NAME RxC = [a b; c d]`,
// `KIND NAME = head(args)`, `check VERB names [grid 1..N] [expect true|false]
// [mirrored]`, `transport dual NEW F D`, `tensor NEW F G`, `compose NEW G F`.
// Throws ParseError carrying a 1-based position for syntax errors, duplicate
// names, references to unbound names, and matrix arity mismatches.
SpecModel parse_spec(const std::string& text);

// Canonical one-statement-per-line rendering; parse(serialize(m)) == m.
std::string serialize_model(const SpecModel& model);

struct RunOptions {
    size_t max_dim = 0;  // cap on grid upper bounds; 0 = uncapped
    bool fail_fast = false;
};

// Evaluates bindings and executes directives in file order. A broken binding
// stops the run with an error entry; a directive that cannot run (wrong kind,
// missing grid, cap exceeded) contributes an error entry and the run goes on.
Report run_checks(const SpecModel& model, const RunOptions& opts = {});

// mode "text": aligned table, witness blocks under failures, summary line.
// mode "json": array of {suite, check, location, status, detail} objects,
// failures carrying witness {lhs, rhs, row, col} with rationals as strings.
std::string format_report(const Report& rep, const std::string& mode);

// 0 when everything passed, 1 on any fail, 2 on any error.
int exit_code_for(const Report& rep);

}  // namespace frobcheck
