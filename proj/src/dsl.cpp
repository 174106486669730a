#include "frobcheck/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "frobcheck/algebra.hpp"
#include "frobcheck/category.hpp"
#include "frobcheck/day_convolution.hpp"
#include "frobcheck/duality.hpp"
#include "frobcheck/error.hpp"
#include "frobcheck/frob_tensor.hpp"
#include "frobcheck/functor.hpp"
#include "frobcheck/linalg.hpp"

namespace frobcheck {

namespace {

// ---- tokens --------------------------------------------------------------

struct Tok {
    enum class Kind { Word, Sym, Newline, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

bool is_sym_char(char c) {
    return c == '[' || c == ']' || c == ';' || c == '(' || c == ')' || c == ',' || c == '=';
}

std::vector<Tok> tokenize(const std::string& text) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    int bracket_depth = 0;
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            if (bracket_depth == 0) out.push_back({Tok::Kind::Newline, "\n", line, col});
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (is_sym_char(c)) {
            if (c == '[') ++bracket_depth;
            if (c == ']' && bracket_depth > 0) --bracket_depth;
            out.push_back({Tok::Kind::Sym, std::string(1, c), line, col});
            ++i;
            ++col;
            continue;
        }
        const int start_col = col;
        size_t j = i;
        while (j < text.size() && text[j] != '\n' && text[j] != ' ' && text[j] != '\t' &&
               text[j] != '\r' && text[j] != '#' && !is_sym_char(text[j])) {
            ++j;
            ++col;
        }
        out.push_back({Tok::Kind::Word, text.substr(i, j - i), line, start_col});
        i = j;
    }
    out.push_back({Tok::Kind::End, "", line, col});
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool is_slot(const std::string& s) { return s == "r" || s == "i" || s == "r0" || s == "i0"; }

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    const char c = s[0];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
}

bool parse_size(const std::string& s, size_t& out) {
    if (s.empty()) return false;
    size_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        if (v > (SIZE_MAX - 9) / 10) return false;
        v = v * 10 + static_cast<size_t>(c - '0');
    }
    out = v;
    return true;
}

// name-argument arity of each check sub-verb
const std::map<std::string, size_t>& check_arity() {
    static const std::map<std::string, size_t> table = {
        {"triangles", 1}, {"frobalg", 1},  {"structural", 1}, {"naturality", 1},
        {"monoidal", 1},  {"comonoidal", 1}, {"frobenius", 1}, {"split", 1},
        {"nat", 1},       {"mate", 2},     {"frobcat", 3},    {"convolution", 1},
    };
    return table;
}

// ---- parser ---------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::vector<Tok> toks) : t_(std::move(toks)) {}

    SpecModel parse() {
        SpecModel model;
        for (;;) {
            while (peek().kind == Tok::Kind::Newline) ++p_;
            if (peek().kind == Tok::Kind::End) break;
            const Tok& kw = peek();
            if (kw.kind != Tok::Kind::Word) fail(kw, "expected a statement keyword");
            if (kw.text == "matrix" || kw.text == "base" || kw.text == "frobalg" ||
                kw.text == "dual" || kw.text == "functor" || kw.text == "transf") {
                model.statements.emplace_back(parse_binding());
            } else if (kw.text == "check" || kw.text == "transport" || kw.text == "tensor" ||
                       kw.text == "compose") {
                model.statements.emplace_back(parse_directive());
            } else {
                fail(kw, "unknown statement keyword '" + kw.text + "'");
            }
            const Tok& end = peek();
            if (end.kind == Tok::Kind::Newline)
                ++p_;
            else if (end.kind != Tok::Kind::End)
                fail(end, "unexpected '" + end.text + "' after statement");
        }
        return model;
    }

private:
    const Tok& peek() const { return t_[p_]; }
    const Tok& take() { return t_[p_++]; }

    [[noreturn]] void fail(const Tok& at, const std::string& msg) const {
        throw ParseError(at.line, at.col, msg);
    }

    const Tok& expect_word(const std::string& what) {
        const Tok& t = peek();
        if (t.kind != Tok::Kind::Word) fail(t, "expected " + what);
        ++p_;
        return t;
    }

    void expect_sym(char c) {
        const Tok& t = peek();
        if (t.kind != Tok::Kind::Sym || t.text[0] != c)
            fail(t, std::string("expected '") + c + "'");
        ++p_;
    }

    bool at_sym(char c) const {
        return peek().kind == Tok::Kind::Sym && peek().text[0] == c;
    }

    std::string fresh_name(const std::string& registered_kind) {
        const Tok& t = expect_word("a name");
        if (!is_identifier(t.text)) fail(t, "'" + t.text + "' is not a valid name");
        if (names_.count(t.text)) fail(t, "duplicate name '" + t.text + "'");
        names_.emplace(t.text, registered_kind);
        return t.text;
    }

    std::string bound_name() {
        const Tok& t = expect_word("a bound name");
        if (!names_.count(t.text)) fail(t, "unknown name '" + t.text + "'");
        return t.text;
    }

    Rational parse_entry(const Tok& t) const {
        try {
            return Rational::parse(t.text);
        } catch (const std::exception&) {
            fail(t, "expected a rational entry, got '" + t.text + "'");
        }
    }

    BindingDecl parse_binding() {
        const Tok kw = take();
        BindingDecl b;
        b.kind = kw.text;
        b.line = kw.line;
        b.name = fresh_name(b.kind);
        if (b.kind == "matrix") {
            const Tok& dims = expect_word("dimensions RxC");
            const size_t xpos = dims.text.find('x');
            size_t rows = 0, cols = 0;
            if (xpos == std::string::npos || !parse_size(dims.text.substr(0, xpos), rows) ||
                !parse_size(dims.text.substr(xpos + 1), cols) || rows == 0 || cols == 0)
                fail(dims, "expected dimensions of the form RxC");
            expect_sym('=');
            b.value = parse_matrix_lit(rows, cols);
        } else {
            expect_sym('=');
            b.value = parse_ctor();
        }
        return b;
    }

    MatrixLit parse_matrix_lit(size_t rows, size_t cols) {
        MatrixLit lit;
        lit.rows = rows;
        lit.cols = cols;
        const Tok& open = peek();
        expect_sym('[');
        size_t row = 0, in_row = 0;
        const Tok* row_start = nullptr;
        for (;;) {
            const Tok& t = peek();
            if (t.kind == Tok::Kind::Word) {
                if (in_row == 0) row_start = &t;
                lit.entries.push_back(parse_entry(t));
                ++in_row;
                ++p_;
                continue;
            }
            if (at_sym(';') || at_sym(']')) {
                const bool closing = t.text[0] == ']';
                ++row;
                if (in_row != cols)
                    fail(row_start ? *row_start : t, "row " + std::to_string(row) + " has " +
                                                         std::to_string(in_row) +
                                                         " entries, expected " +
                                                         std::to_string(cols));
                in_row = 0;
                row_start = nullptr;
                ++p_;
                if (!closing) continue;
                if (row != rows)
                    fail(t, "matrix literal has " + std::to_string(row) + " rows, expected " +
                                std::to_string(rows));
                return lit;
            }
            fail(t.kind == Tok::Kind::End ? open : t, "unterminated matrix literal");
        }
    }

    CtorExpr parse_ctor() {
        CtorExpr c;
        const Tok& head = expect_word("a constructor");
        if (!is_identifier(head.text)) fail(head, "expected a constructor name");
        c.head = head.text;
        expect_sym('(');
        if (!at_sym(')')) {
            for (;;) {
                const Tok& arg = expect_word("a constructor argument");
                if (looks_numeric(arg.text)) {
                    parse_entry(arg);  // must at least be a rational
                } else if (!is_slot(arg.text) && !names_.count(arg.text)) {
                    fail(arg, "unknown name '" + arg.text + "'");
                }
                c.args.push_back(arg.text);
                if (at_sym(',')) {
                    ++p_;
                    continue;
                }
                break;
            }
        }
        expect_sym(')');
        return c;
    }

    DirectiveDecl parse_directive() {
        const Tok kw = take();
        DirectiveDecl d;
        d.line = kw.line;
        if (kw.text == "transport") {
            const Tok& sub = expect_word("'dual'");
            if (sub.text != "dual") fail(sub, "expected 'dual' after 'transport'");
            d.verb = "transport_dual";
            d.args.push_back(fresh_name("dual"));
            d.args.push_back(bound_name());
            d.args.push_back(bound_name());
            return d;
        }
        if (kw.text == "tensor" || kw.text == "compose") {
            d.verb = kw.text;
            d.args.push_back(fresh_name("functor"));
            d.args.push_back(bound_name());
            d.args.push_back(bound_name());
            return d;
        }

        const Tok& sub = expect_word("a check name");
        const auto arity_it = check_arity().find(sub.text);
        if (arity_it == check_arity().end()) fail(sub, "unknown check '" + sub.text + "'");
        d.verb = sub.text;
        while (peek().kind == Tok::Kind::Word) {
            const Tok& w = take();
            if (w.text == "grid") {
                if (d.grid_lo != 0) fail(w, "duplicate grid clause");
                const Tok& range = expect_word("a range LO..HI");
                const size_t dots = range.text.find("..");
                size_t lo = 0, hi = 0;
                if (dots == std::string::npos || !parse_size(range.text.substr(0, dots), lo) ||
                    !parse_size(range.text.substr(dots + 2), hi) || lo == 0)
                    fail(range, "expected a grid range of the form 1..N");
                if (hi < lo) fail(range, "grid range is empty");
                d.grid_lo = lo;
                d.grid_hi = hi;
            } else if (w.text == "expect") {
                if (d.verb != "split") fail(w, "expect clause only applies to check split");
                const Tok& v = expect_word("'true' or 'false'");
                if (v.text == "true")
                    d.expect_split = true;
                else if (v.text == "false")
                    d.expect_split = false;
                else
                    fail(v, "expected 'true' or 'false'");
            } else if (w.text == "mirrored") {
                if (d.verb != "mate") fail(w, "mirrored only applies to check mate");
                d.mirrored = true;
            } else {
                if (!names_.count(w.text)) fail(w, "unknown name '" + w.text + "'");
                d.args.push_back(w.text);
            }
        }
        if (d.args.size() != arity_it->second)
            fail(kw, "check " + d.verb + " expects " + std::to_string(arity_it->second) +
                         " name(s), got " + std::to_string(d.args.size()));
        return d;
    }

    std::vector<Tok> t_;
    size_t p_ = 0;
    std::map<std::string, std::string> names_;  // name -> declared kind
};

}  // namespace

SpecModel parse_spec(const std::string& text) { return Parser(tokenize(text)).parse(); }

std::string serialize_model(const SpecModel& model) {
    std::ostringstream os;
    for (const Statement& st : model.statements) {
        if (const BindingDecl* b = std::get_if<BindingDecl>(&st)) {
            if (const MatrixLit* m = std::get_if<MatrixLit>(&b->value)) {
                os << "matrix " << b->name << " " << m->rows << "x" << m->cols << " = [";
                for (size_t r = 0; r < m->rows; ++r) {
                    if (r) os << "; ";
                    for (size_t c = 0; c < m->cols; ++c) {
                        if (c) os << " ";
                        os << m->entries[r * m->cols + c].to_string();
                    }
                }
                os << "]";
            } else {
                const CtorExpr& c = std::get<CtorExpr>(b->value);
                os << b->kind << " " << b->name << " = " << c.head << "(";
                for (size_t k = 0; k < c.args.size(); ++k) os << (k ? ", " : "") << c.args[k];
                os << ")";
            }
        } else {
            const DirectiveDecl& d = std::get<DirectiveDecl>(st);
            if (d.verb == "transport_dual") {
                os << "transport dual";
                for (const std::string& a : d.args) os << " " << a;
            } else if (d.verb == "tensor" || d.verb == "compose") {
                os << d.verb;
                for (const std::string& a : d.args) os << " " << a;
            } else {
                os << "check " << d.verb;
                for (const std::string& a : d.args) os << " " << a;
                if (d.grid_lo != 0) os << " grid " << d.grid_lo << ".." << d.grid_hi;
                if (d.expect_split) os << " expect " << (*d.expect_split ? "true" : "false");
                if (d.mirrored) os << " mirrored";
            }
        }
        os << "\n";
    }
    return os.str();
}

// ---- execution -------------------------------------------------------------

namespace {

struct Env {
    std::map<std::string, RatMatrix> matrices;
    std::map<std::string, FiniteBase> bases;
    std::map<std::string, FrobeniusAlgebra> algebras;
    std::map<std::string, DualSituation> duals;
    std::map<std::string, FrobFunctorData> functors;
    std::map<std::string, BaseFunctor> convs;
    std::map<std::string, MonComonNatTransf> transfs;
};

const RatMatrix& need_matrix(const Env& env, const std::string& n) {
    const auto it = env.matrices.find(n);
    if (it == env.matrices.end()) throw StructureError("'" + n + "' is not a bound matrix");
    return it->second;
}

const FiniteBase& need_base(const Env& env, const std::string& n) {
    const auto it = env.bases.find(n);
    if (it == env.bases.end()) throw StructureError("'" + n + "' is not a bound base");
    return it->second;
}

const FrobeniusAlgebra& need_algebra(const Env& env, const std::string& n) {
    const auto it = env.algebras.find(n);
    if (it == env.algebras.end()) throw StructureError("'" + n + "' is not a bound algebra");
    return it->second;
}

const DualSituation& need_dual(const Env& env, const std::string& n) {
    const auto it = env.duals.find(n);
    if (it == env.duals.end()) throw StructureError("'" + n + "' is not a bound dual situation");
    return it->second;
}

const FrobFunctorData& need_mat_functor(const Env& env, const std::string& n) {
    const auto it = env.functors.find(n);
    if (it == env.functors.end())
        throw StructureError("'" + n + "' is not a bound matrix-valued functor");
    return it->second;
}

const MonComonNatTransf& need_transf(const Env& env, const std::string& n) {
    const auto it = env.transfs.find(n);
    if (it == env.transfs.end())
        throw StructureError("'" + n + "' is not a bound transformation");
    return it->second;
}

// Either kind of functor binding, viewed as checkable functor data.
FrobFunctorData functor_view(const Env& env, const std::string& n) {
    if (const auto it = env.functors.find(n); it != env.functors.end()) return it->second;
    if (const auto it = env.convs.find(n); it != env.convs.end())
        return to_frob_functor(it->second);
    throw StructureError("'" + n + "' is not a bound functor");
}

size_t ctor_int(const CtorExpr& c, size_t k, const std::string& what) {
    size_t v = 0;
    if (k >= c.args.size() || !parse_size(c.args[k], v) || v == 0)
        throw StructureError(c.head + ": expected a positive integer for " + what);
    return v;
}

void require_args(const CtorExpr& c, size_t n) {
    if (c.args.size() != n)
        throw StructureError(c.head + " expects " + std::to_string(n) + " argument(s), got " +
                             std::to_string(c.args.size()));
}

void check_shape(const RatMatrix& m, size_t rows, size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw StructureError(what + " must be " + std::to_string(rows) + " x " +
                             std::to_string(cols) + ", got " + std::to_string(m.rows()) + " x " +
                             std::to_string(m.cols()));
}

void bind_frobalg(Env& env, const BindingDecl& b, const CtorExpr& c) {
    if (c.head == "zmod") {
        require_args(c, 1);
        FrobeniusAlgebra a = zmod_algebra(static_cast<int>(ctor_int(c, 0, "the order")));
        a.name = b.name;
        env.algebras.emplace(b.name, std::move(a));
    } else if (c.head == "unit") {
        require_args(c, 0);
        FrobeniusAlgebra a = unit_algebra();
        a.name = b.name;
        env.algebras.emplace(b.name, std::move(a));
    } else if (c.head == "algebra") {
        require_args(c, 5);
        const size_t d = ctor_int(c, 0, "the dimension");
        FrobeniusAlgebra a;
        a.r = MonObject::mat(d);
        a.mu = need_matrix(env, c.args[1]);
        a.eta = need_matrix(env, c.args[2]);
        a.delta = need_matrix(env, c.args[3]);
        a.eps = need_matrix(env, c.args[4]);
        a.name = b.name;
        check_shape(a.mu, d, d * d, "mu");
        check_shape(a.eta, d, 1, "eta");
        check_shape(a.delta, d * d, d, "delta");
        check_shape(a.eps, 1, d, "eps");
        env.algebras.emplace(b.name, std::move(a));
    } else if (c.head == "apply") {
        require_args(c, 2);
        FrobeniusAlgebra a =
            apply_functor_to_algebra(need_mat_functor(env, c.args[0]), need_algebra(env, c.args[1]));
        a.name = b.name;
        env.algebras.emplace(b.name, std::move(a));
    } else {
        throw StructureError("unknown frobalg constructor '" + c.head + "'");
    }
}

void bind_dual(Env& env, const BindingDecl& b, const CtorExpr& c) {
    if (c.head == "cupcap") {
        require_args(c, 1);
        DualSituation d = cupcap(ctor_int(c, 0, "the dimension"));
        d.name = b.name;
        env.duals.emplace(b.name, std::move(d));
    } else if (c.head == "pair") {
        require_args(c, 4);
        DualSituation d;
        d.a = MonObject::mat(ctor_int(c, 0, "dim(A)"));
        d.b = MonObject::mat(ctor_int(c, 1, "dim(B)"));
        d.e = need_matrix(env, c.args[2]);
        d.n = need_matrix(env, c.args[3]);
        d.name = b.name;
        check_shape(d.e, 1, d.a.dim * d.b.dim, "e");
        check_shape(d.n, d.b.dim * d.a.dim, 1, "n");
        env.duals.emplace(b.name, std::move(d));
    } else {
        throw StructureError("unknown dual constructor '" + c.head + "'");
    }
}

void override_conv(Env& env, const BindingDecl& b, const CtorExpr& c) {
    BaseFunctor f = env.convs.at(c.args[0]);
    if (!f.maps)
        throw StructureError("override: functor '" + c.args[0] + "' carries no structure maps");
    const std::string& slot = c.args[1];
    const RatMatrix& m = need_matrix(env, c.args[2]);
    const size_t v = f.v_dim;
    if (slot == "r") {
        check_shape(m, v, v * v, "r");
        f.maps->r = m;
    } else if (slot == "i") {
        check_shape(m, v * v, v, "i");
        f.maps->i = m;
    } else if (slot == "r0") {
        check_shape(m, v, 1, "r0");
        f.maps->r0 = m;
    } else if (slot == "i0") {
        check_shape(m, 1, v, "i0");
        f.maps->i0 = m;
    } else {
        throw StructureError("override: unknown slot '" + slot + "'");
    }
    f.name = b.name;
    env.convs.emplace(b.name, std::move(f));
}

void bind_functor(Env& env, const BindingDecl& b, const CtorExpr& c) {
    const CategoryInstance matq = CategoryInstance::mat_q();
    if (c.head == "identity") {
        require_args(c, 0);
        FrobFunctorData f = identity_functor(matq);
        f.name = b.name;
        env.functors.emplace(b.name, std::move(f));
    } else if (c.head == "unit") {
        if (c.args.size() > 1) throw StructureError("unit expects at most one argument");
        FrobFunctorData f =
            c.args.empty()
                ? unit_functor(matq, matq)
                : unit_functor(CategoryInstance::sigma_g(need_base(env, c.args[0])), matq);
        f.name = b.name;
        env.functors.emplace(b.name, std::move(f));
    } else if (c.head == "tensor_left") {
        require_args(c, 1);
        FrobFunctorData f = tensor_left_functor(need_algebra(env, c.args[0]), matq);
        f.name = b.name;
        env.functors.emplace(b.name, std::move(f));
    } else if (c.head == "from_strong") {
        require_args(c, 1);
        FrobFunctorData f = from_strong(need_mat_functor(env, c.args[0]));
        f.name = b.name;
        env.functors.emplace(b.name, std::move(f));
    } else if (c.head == "regular") {
        require_args(c, 1);
        BaseFunctor f = regular_functor(need_base(env, c.args[0]));
        f.name = b.name;
        env.convs.emplace(b.name, std::move(f));
    } else if (c.head == "override") {
        if (c.args.size() == 3) {
            if (env.convs.count(c.args[0])) {
                override_conv(env, b, c);
                return;
            }
            const std::string& slot = c.args[1];
            if (slot != "r0" && slot != "i0")
                throw StructureError(
                    "override of r/i on a matrix-source functor needs the object pair: "
                    "override(F, " + slot + ", A, B, M)");
            FrobFunctorData f = with_override(need_mat_functor(env, c.args[0]), slot,
                                              need_matrix(env, c.args[2]));
            f.name = b.name;
            env.functors.emplace(b.name, std::move(f));
        } else if (c.args.size() == 5) {
            const std::string& slot = c.args[1];
            if (slot != "r" && slot != "i")
                throw StructureError("override with an object pair applies to slots r and i");
            FrobFunctorData f = with_override(
                need_mat_functor(env, c.args[0]), slot, MonObject::mat(ctor_int(c, 2, "dim(A)")),
                MonObject::mat(ctor_int(c, 3, "dim(B)")), need_matrix(env, c.args[4]));
            f.name = b.name;
            env.functors.emplace(b.name, std::move(f));
        } else {
            throw StructureError("override expects (F, slot, M) or (F, slot, A, B, M)");
        }
    } else {
        throw StructureError("unknown functor constructor '" + c.head + "'");
    }
}

void bind_transf(Env& env, const BindingDecl& b, const CtorExpr& c) {
    MonComonNatTransf t;
    if (c.head == "identity") {
        require_args(c, 1);
        t = identity_transf(need_mat_functor(env, c.args[0]));
    } else if (c.head == "scale") {
        require_args(c, 2);
        t = scale_transf(need_mat_functor(env, c.args[0]), Rational::parse(c.args[1]));
    } else if (c.head == "invaut") {
        require_args(c, 1);
        t = invaut_transf(need_mat_functor(env, c.args[0]));
    } else {
        throw StructureError("unknown transf constructor '" + c.head + "'");
    }
    t.name = b.name;
    env.transfs.emplace(b.name, std::move(t));
}

void bind_statement(Env& env, const BindingDecl& b) {
    if (b.kind == "matrix") {
        const MatrixLit& m = std::get<MatrixLit>(b.value);
        RatMatrix out(m.rows, m.cols);
        for (size_t r = 0; r < m.rows; ++r)
            for (size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.entries[r * m.cols + c];
        env.matrices.emplace(b.name, std::move(out));
        return;
    }
    const CtorExpr& c = std::get<CtorExpr>(b.value);
    if (b.kind == "base") {
        if (c.head != "zmod") throw StructureError("unknown base constructor '" + c.head + "'");
        require_args(c, 1);
        env.bases.emplace(b.name,
                          FiniteBase::zmod(static_cast<int>(ctor_int(c, 0, "the order"))));
    } else if (b.kind == "frobalg") {
        bind_frobalg(env, b, c);
    } else if (b.kind == "dual") {
        bind_dual(env, b, c);
    } else if (b.kind == "functor") {
        bind_functor(env, b, c);
    } else if (b.kind == "transf") {
        bind_transf(env, b, c);
    } else {
        throw StructureError("unknown binding kind '" + b.kind + "'");
    }
}

ObjectGrid grid_for(const CategoryInstance& source, const DirectiveDecl& d,
                    const RunOptions& opts) {
    if (!source.is_mat_q()) return ObjectGrid::star();
    if (d.grid_lo == 0)
        throw StructureError("check " + d.verb +
                             " needs a grid clause for a matrix-source functor");
    if (opts.max_dim != 0 && d.grid_hi > opts.max_dim)
        throw StructureError("grid " + std::to_string(d.grid_lo) + ".." +
                             std::to_string(d.grid_hi) + " exceeds the dimension cap " +
                             std::to_string(opts.max_dim));
    return ObjectGrid::mat_dims(d.grid_lo, d.grid_hi);
}

void run_split(Report& rep, const FrobFunctorData& fd, const ObjectGrid& grid,
               const DirectiveDecl& d) {
    const SplitResult s = is_split(fd, grid);
    const std::string loc = fd.name + " " + grid.to_string();
    const std::string got = std::string("split=") + (s.split ? "true" : "false");
    if (!d.expect_split) {
        rep.add(pass_entry("split", "is_split", loc,
                           got + (s.counterexample.empty() ? "" : "; " + s.counterexample)));
        return;
    }
    if (*d.expect_split == s.split) {
        rep.add(pass_entry("split", "is_split", loc, got + ", as expected"));
        return;
    }
    // exhibit r i on the first offending (or first) pair as the witness
    for (const MonObject& a : grid.objects)
        for (const MonObject& b : grid.objects) {
            const RatMatrix ri = mat_mul(as_matrix(fd.r(a, b)), as_matrix(fd.i(a, b)));
            if (!s.split && ri.is_identity()) continue;
            rep.add(fail_entry("split", "is_split",
                               loc + " at (" + a.to_string() + ", " + b.to_string() + ")", ri,
                               RatMatrix::identity(ri.rows()),
                               "expected " + std::string(*d.expect_split ? "split" : "non-split") +
                                   ", got " + got));
            return;
        }
}

std::string directive_loc(const DirectiveDecl& d) {
    std::string s = d.verb;
    for (const std::string& a : d.args) s += " " + a;
    return s + " (line " + std::to_string(d.line) + ")";
}

void run_directive(Report& rep, Env& env, const DirectiveDecl& d, const RunOptions& opts) {
    try {
        if (d.verb == "triangles") {
            rep.append(check_triangles(need_dual(env, d.args[0])));
        } else if (d.verb == "frobalg") {
            rep.append(check_frobenius_algebra(need_algebra(env, d.args[0])));
        } else if (d.verb == "structural" || d.verb == "naturality" || d.verb == "monoidal" ||
                   d.verb == "comonoidal" || d.verb == "frobenius" || d.verb == "split") {
            const FrobFunctorData fd = functor_view(env, d.args[0]);
            const ObjectGrid grid = grid_for(fd.source, d, opts);
            if (d.verb == "structural")
                rep.append(structural_validate(fd, grid));
            else if (d.verb == "naturality")
                rep.append(check_naturality(fd, grid));
            else if (d.verb == "monoidal")
                rep.append(check_monoidal_coherence(fd, grid));
            else if (d.verb == "comonoidal")
                rep.append(check_comonoidal_coherence(fd, grid));
            else if (d.verb == "frobenius")
                rep.append(check_frobenius(fd, grid));
            else
                run_split(rep, fd, grid, d);
        } else if (d.verb == "nat") {
            const MonComonNatTransf& t = need_transf(env, d.args[0]);
            rep.append(check_nat_transf(t, grid_for(t.f.source, d, opts)));
        } else if (d.verb == "mate") {
            const MonComonNatTransf& t = need_transf(env, d.args[0]);
            const DualSituation& dl = need_dual(env, d.args[1]);
            const Report nat = check_nat_transf(t, grid_for(t.f.source, d, opts));
            rep.append(nat);
            if (!nat.all_pass()) {
                rep.add(error_entry("mate", "trusted", t.name + " against " + dl.name,
                                    "mate not computed: the transformation failed its "
                                    "coherence gate"));
                return;
            }
            rep.append(check_mate_invertibility(t, dl, d.mirrored));
        } else if (d.verb == "frobcat") {
            const FrobFunctorData f = functor_view(env, d.args[0]);
            const FrobFunctorData g = functor_view(env, d.args[1]);
            const FrobFunctorData h = functor_view(env, d.args[2]);
            rep.append(check_frob_category(f, g, h, grid_for(f.source, d, opts)));
        } else if (d.verb == "convolution") {
            const auto it = env.convs.find(d.args[0]);
            if (it == env.convs.end())
                throw StructureError("'" + d.args[0] +
                                     "' is not a Sigma G functor; check convolution needs one");
            rep.append(check_convolution(it->second));
        } else if (d.verb == "transport_dual") {
            DualSituation td = transport_dual(need_mat_functor(env, d.args[1]),
                                              need_dual(env, d.args[2]));
            td.name = d.args[0];
            const std::string detail =
                "objects (" + td.a.to_string() + ", " + td.b.to_string() + ")";
            env.duals.emplace(d.args[0], std::move(td));
            rep.add(pass_entry("construct", "transport_dual", d.args[0], detail));
        } else if (d.verb == "tensor") {
            FrobFunctorData f = pointwise_tensor(need_mat_functor(env, d.args[1]),
                                                 need_mat_functor(env, d.args[2]));
            f.name = d.args[0];
            env.functors.emplace(d.args[0], std::move(f));
            rep.add(pass_entry("construct", "tensor", d.args[0],
                               d.args[1] + " (x) " + d.args[2]));
        } else if (d.verb == "compose") {
            FrobFunctorData f = compose_frobenius(need_mat_functor(env, d.args[1]),
                                                  need_mat_functor(env, d.args[2]));
            f.name = d.args[0];
            env.functors.emplace(d.args[0], std::move(f));
            rep.add(pass_entry("construct", "compose", d.args[0],
                               d.args[1] + " after " + d.args[2]));
        } else {
            throw StructureError("unknown directive verb '" + d.verb + "'");
        }
    } catch (const std::exception& ex) {
        rep.add(error_entry(d.verb, "directive", directive_loc(d), ex.what()));
    }
}

}  // namespace

Report run_checks(const SpecModel& model, const RunOptions& opts) {
    Report rep;
    Env env;
    for (const Statement& st : model.statements) {
        if (const BindingDecl* b = std::get_if<BindingDecl>(&st)) {
            try {
                bind_statement(env, *b);
            } catch (const std::exception& ex) {
                rep.add(error_entry("bind", b->kind,
                                    b->name + " (line " + std::to_string(b->line) + ")",
                                    ex.what()));
                return rep;  // later statements would cascade
            }
        } else {
            run_directive(rep, env, std::get<DirectiveDecl>(st), opts);
        }
        if (opts.fail_fast && (rep.has_fail() || rep.has_error())) return rep;
    }
    return rep;
}

// ---- report rendering -------------------------------------------------------

namespace {

nlohmann::ordered_json matrix_json(const RatMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_json(const Report& rep) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ReportEntry& e : rep.entries) {
        nlohmann::ordered_json obj;
        obj["suite"] = e.suite;
        obj["check"] = e.check;
        obj["location"] = e.location;
        obj["status"] = status_name(e.status);
        obj["detail"] = e.detail;
        if (e.witness) {
            nlohmann::ordered_json w;
            w["lhs"] = matrix_json(e.witness->lhs);
            w["rhs"] = matrix_json(e.witness->rhs);
            w["row"] = e.witness->row;
            w["col"] = e.witness->col;
            obj["witness"] = std::move(w);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string format_text(const Report& rep) {
    size_t w_suite = 0, w_check = 0, w_loc = 0;
    for (const ReportEntry& e : rep.entries) {
        w_suite = std::max(w_suite, e.suite.size());
        w_check = std::max(w_check, e.check.size());
        w_loc = std::max(w_loc, e.location.size());
    }
    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    std::ostringstream os;
    size_t n_pass = 0, n_fail = 0, n_error = 0;
    for (const ReportEntry& e : rep.entries) {
        switch (e.status) {
            case Status::Pass: ++n_pass; break;
            case Status::Fail: ++n_fail; break;
            case Status::Error: ++n_error; break;
        }
        os << pad(status_name(e.status), 6) << pad(e.suite, w_suite + 2)
           << pad(e.check, w_check + 2) << pad(e.location, w_loc + 2);
        if (!e.detail.empty()) os << e.detail;
        os << "\n";
        if (e.witness) {
            os << "      lhs = " << e.witness->lhs.to_string() << "\n";
            os << "      rhs = " << e.witness->rhs.to_string() << "\n";
            const Witness& w = *e.witness;
            if (w.lhs.rows() == w.rhs.rows() && w.lhs.cols() == w.rhs.cols() &&
                w.row < w.lhs.rows() && w.col < w.lhs.cols()) {
                os << "      first difference at (" << w.row << ", " << w.col
                   << "): " << w.lhs.at(w.row, w.col).to_string() << " vs "
                   << w.rhs.at(w.row, w.col).to_string() << "\n";
            }
        }
    }
    os << rep.entries.size() << " checks: " << n_pass << " pass, " << n_fail << " fail, "
       << n_error << " error\n";
    return os.str();
}

}  // namespace

std::string format_report(const Report& rep, const std::string& mode) {
    if (mode == "json") return format_json(rep);
    if (mode == "text") return format_text(rep);
    throw StructureError("unknown report mode '" + mode + "'");
}

int exit_code_for(const Report& rep) {
    if (rep.has_error()) return 2;
    if (rep.has_fail()) return 1;
    return 0;
}

}  // namespace frobcheck
