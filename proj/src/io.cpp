#include "homsys/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "homsys/decomp.hpp"

namespace homsys::io {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
    return os.str();
}

namespace {

struct Tok {
    int line = 0;
    std::vector<std::string> t;
};

std::vector<Tok> tokenize(const std::string& text) {
    std::vector<Tok> out;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::string spaced;
        for (char c : raw)  // let ';' stand alone as a token
            if (c == ';')
                spaced += " ; ";
            else
                spaced += c;
        std::istringstream ls(spaced);
        Tok tok{line, {}};
        std::string word;
        while (ls >> word) tok.t.push_back(word);
        if (!tok.t.empty()) out.push_back(std::move(tok));
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

struct Cursor {
    const std::vector<Tok>& toks;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const Tok& peek() const {
        if (done()) throw parse_error("unexpected end of file");
        return toks[pos];
    }
    const Tok& next() {
        const Tok& t = peek();
        ++pos;
        return t;
    }
};

long long to_int(int line, const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "bad integer '" + s + "'");
    }
}

// Rows of integers separated by ';' tokens, starting at t[from].
std::vector<std::vector<long long>> parse_rows(const Tok& tok, std::size_t from) {
    std::vector<std::vector<long long>> rows(1);
    for (std::size_t i = from; i < tok.t.size(); ++i) {
        if (tok.t[i] == ";")
            rows.emplace_back();
        else
            rows.back().push_back(to_int(tok.line, tok.t[i]));
    }
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) fail(tok.line, "ragged rows");
    return rows;
}

Mat rows_to_mat(int line, const std::vector<std::vector<long long>>& rows, std::uint32_t want_rows,
                std::uint32_t want_cols, PrimeField fld, const char* what) {
    if (rows.size() != want_rows || (want_rows > 0 && rows.front().size() != want_cols))
        fail(line, std::string(what) + ": expected " + std::to_string(want_rows) + "x" +
                       std::to_string(want_cols) + " entries");
    Mat m(want_rows, want_cols, fld);
    for (std::uint32_t r = 0; r < want_rows; ++r)
        for (std::uint32_t c = 0; c < want_cols; ++c) m.at(r, c) = fld.reduce(rows[r][c]);
    return m;
}

// Common body of delta/module blocks: vertex dims and arrow matrices.
Representation parse_rep_body(Cursor& c, const BoundQuiverAlgebra& alg, int header_line) {
    struct RawMap {
        int line;
        std::size_t arrow;
        std::vector<std::vector<long long>> rows;
    };
    std::vector<std::uint32_t> dims(alg.num_vertices(), 0);
    std::vector<bool> dim_seen(alg.num_vertices(), false);
    std::vector<RawMap> raw;
    for (;;) {
        const Tok& tok = c.next();
        if (tok.t[0] == "end") break;
        if (tok.t[0] == "vertex") {
            if (tok.t.size() != 4 || tok.t[2] != "dim")
                fail(tok.line, "expected: vertex <name> dim <n>");
            std::size_t v = alg.quiver.vertex_index(tok.t[1]);
            if (dim_seen[v]) fail(tok.line, "duplicate dimension for vertex '" + tok.t[1] + "'");
            long long n = to_int(tok.line, tok.t[3]);
            if (n < 0 || n > 64) fail(tok.line, "dimension out of range");
            dims[v] = static_cast<std::uint32_t>(n);
            dim_seen[v] = true;
        } else if (tok.t[0] == "map") {
            if (tok.t.size() < 2) fail(tok.line, "expected: map <arrow> <entries>");
            raw.push_back({tok.line, alg.quiver.arrow_index(tok.t[1]), parse_rows(tok, 2)});
        } else {
            fail(tok.line, "unexpected directive '" + tok.t[0] + "' in a module block");
        }
    }
    Representation rep;
    rep.dims = dims;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a)
        rep.maps.emplace_back(dims[alg.quiver.arrows[a].tgt], dims[alg.quiver.arrows[a].src],
                              alg.field);
    std::vector<bool> map_seen(alg.num_arrows(), false);
    for (const RawMap& rm : raw) {
        if (map_seen[rm.arrow]) fail(rm.line, "duplicate map");
        map_seen[rm.arrow] = true;
        const Arrow& ar = alg.quiver.arrows[rm.arrow];
        rep.maps[rm.arrow] =
            rows_to_mat(rm.line, rm.rows, dims[ar.tgt], dims[ar.src], alg.field, "map");
    }
    auto bad = validate_representation(alg, rep);
    if (!bad.empty())
        fail(header_line,
             "the module violates relation " + std::to_string(bad.front().relation + 1));
    return rep;
}

}  // namespace

InputFile parse_string(const std::string& text, const std::string& what) {
    std::vector<Tok> toks = tokenize(text);
    Cursor c{toks};
    InputFile in;
    in.digest = fnv1a_hex(text);
    try {
        // field
        {
            const Tok& tok = c.next();
            if (tok.t[0] != "field" || tok.t.size() != 2)
                fail(tok.line, "the file must start with: field <p>");
            long long p = to_int(tok.line, tok.t[1]);
            if (p < 2 || p > 65535) fail(tok.line, "field characteristic out of range");
            try {
                in.algebra.field = PrimeField(static_cast<std::uint32_t>(p));
            } catch (const error& e) {
                fail(tok.line, e.what());
            }
        }
        // quiver
        Quiver quiver;
        {
            const Tok& head = c.next();
            if (head.t != std::vector<std::string>{"quiver"}) fail(head.line, "expected: quiver");
            std::map<std::string, std::size_t> vidx;
            for (;;) {
                const Tok& tok = c.next();
                if (tok.t[0] == "end") break;
                if (tok.t[0] == "vertex" && tok.t.size() == 2) {
                    if (vidx.count(tok.t[1])) fail(tok.line, "duplicate vertex '" + tok.t[1] + "'");
                    vidx[tok.t[1]] = quiver.vertices.size();
                    quiver.vertices.push_back(tok.t[1]);
                } else if (tok.t[0] == "arrow" && tok.t.size() == 4) {
                    for (const Arrow& a : quiver.arrows)
                        if (a.name == tok.t[1]) fail(tok.line, "duplicate arrow '" + tok.t[1] + "'");
                    auto s = vidx.find(tok.t[2]), t = vidx.find(tok.t[3]);
                    if (s == vidx.end()) fail(tok.line, "unknown vertex '" + tok.t[2] + "'");
                    if (t == vidx.end()) fail(tok.line, "unknown vertex '" + tok.t[3] + "'");
                    quiver.arrows.push_back({tok.t[1], s->second, t->second});
                } else {
                    fail(tok.line, "expected 'vertex <name>' or 'arrow <name> <src> <tgt>'");
                }
            }
            if (quiver.vertices.empty()) fail(head.line, "the quiver has no vertices");
        }
        // relations (optional)
        std::vector<Relation> relations;
        if (!c.done() && c.peek().t[0] == "relations") {
            c.next();
            for (;;) {
                const Tok& tok = c.next();
                if (tok.t[0] == "end") break;
                if (tok.t[0] != "relation" || tok.t.size() < 3)
                    fail(tok.line, "expected: relation <coeff> <arrows...> [+ ...]");
                Relation rel;
                std::size_t i = 1;
                while (i < tok.t.size()) {
                    PathTerm term;
                    term.coeff = in.algebra.field.reduce(to_int(tok.line, tok.t[i++]));
                    if (term.coeff == 0) fail(tok.line, "zero coefficient in a relation");
                    while (i < tok.t.size() && tok.t[i] != "+") {
                        bool known = false;
                        for (std::size_t a = 0; a < quiver.arrows.size(); ++a)
                            if (quiver.arrows[a].name == tok.t[i]) {
                                term.arrows.push_back(a);
                                known = true;
                                break;
                            }
                        if (!known) fail(tok.line, "unknown arrow '" + tok.t[i] + "'");
                        ++i;
                    }
                    if (i < tok.t.size()) ++i;  // skip '+'
                    if (term.arrows.empty()) fail(tok.line, "empty path in a relation");
                    rel.terms.push_back(std::move(term));
                }
                try {  // line-accurate admissibility check, one relation at a time
                    make_algebra(quiver, in.algebra.field, {rel});
                } catch (const error& e) {
                    fail(tok.line, e.what());
                }
                relations.push_back(std::move(rel));
            }
        }
        in.algebra = make_algebra(std::move(quiver), in.algebra.field, std::move(relations));
        // omega
        {
            const Tok& head = c.next();
            if (head.t != std::vector<std::string>{"omega"}) fail(head.line, "expected: omega");
            std::map<std::string, std::size_t> widx;
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (;;) {
                const Tok& tok = c.next();
                if (tok.t[0] == "end") break;
                if (tok.t[0] == "element" && tok.t.size() == 2) {
                    if (widx.count(tok.t[1]))
                        fail(tok.line, "duplicate element '" + tok.t[1] + "'");
                    widx[tok.t[1]] = in.omega.elements.size();
                    in.omega.elements.push_back(tok.t[1]);
                } else if (tok.t[0] == "leq" && tok.t.size() == 3) {
                    auto a = widx.find(tok.t[1]), b = widx.find(tok.t[2]);
                    if (a == widx.end()) fail(tok.line, "unknown element '" + tok.t[1] + "'");
                    if (b == widx.end()) fail(tok.line, "unknown element '" + tok.t[2] + "'");
                    pairs.emplace_back(a->second, b->second);
                } else {
                    fail(tok.line, "expected 'element <name>' or 'leq <a> <b>'");
                }
            }
            if (in.omega.elements.empty()) fail(head.line, "the index set is empty");
            const std::size_t n = in.omega.elements.size();
            in.omega.leq.assign(n, std::vector<char>(n, 0));
            for (std::size_t i = 0; i < n; ++i) in.omega.leq[i][i] = 1;  // reflexive by fiat
            for (auto [a, b] : pairs) in.omega.leq[a][b] = 1;
        }
        // member / module / filtration blocks
        in.delta.assign(in.omega.size(), Representation{});
        std::vector<bool> have_delta(in.omega.size(), false);
        while (!c.done()) {
            const Tok& head = c.next();
            if (head.t[0] == "delta" && head.t.size() == 2) {
                std::size_t w = in.omega.index_of(head.t[1]);
                if (have_delta[w]) fail(head.line, "duplicate delta '" + head.t[1] + "'");
                in.delta[w] = parse_rep_body(c, in.algebra, head.line);
                have_delta[w] = true;
            } else if (head.t[0] == "module" && head.t.size() == 2) {
                for (const auto& [nm, rep] : in.modules)
                    if (nm == head.t[1]) fail(head.line, "duplicate module '" + head.t[1] + "'");
                for (const std::string& nm : in.omega.elements)
                    if (nm == head.t[1])
                        fail(head.line, "module name '" + head.t[1] + "' clashes with an element");
                in.modules.emplace_back(head.t[1], parse_rep_body(c, in.algebra, head.line));
            } else if (head.t[0] == "filtration" && head.t.size() == 4 && head.t[2] == "of") {
                for (const NamedFiltration& f : in.filtrations)
                    if (f.name == head.t[1])
                        fail(head.line, "duplicate filtration '" + head.t[1] + "'");
                NamedFiltration nf;
                nf.name = head.t[1];
                nf.module_name = head.t[3];
                const Representation* mod = nullptr;
                for (const auto& [nm, rep] : in.modules)
                    if (nm == nf.module_name) mod = &rep;
                if (!mod) fail(head.line, "unknown module '" + nf.module_name + "'");
                for (;;) {
                    const Tok& tok = c.next();
                    if (tok.t[0] == "end") break;
                    if (tok.t[0] != "step" || tok.t.size() != 2)
                        fail(tok.line, "expected: step <element>");
                    nf.labels.push_back(in.omega.index_of(tok.t[1]));
                    Submodule sub;
                    for (std::size_t v = 0; v < in.algebra.num_vertices(); ++v)
                        sub.spaces.push_back(
                            Subspace::zero(mod->dims[v], in.algebra.field));
                    for (;;) {
                        const Tok& stok = c.next();
                        if (stok.t[0] == "end") break;
                        if (stok.t[0] != "vertex" || stok.t.size() < 3 || stok.t[2] != "basis")
                            fail(stok.line, "expected: vertex <name> basis <rows>");
                        std::size_t v = in.algebra.quiver.vertex_index(stok.t[1]);
                        auto rows = parse_rows(stok, 3);
                        Mat m = rows_to_mat(stok.line, rows,
                                            static_cast<std::uint32_t>(rows.size()),
                                            mod->dims[v], in.algebra.field, "basis");
                        sub.spaces[v] = Subspace::span(m);
                    }
                    nf.chain_tail.push_back(std::move(sub));
                }
                in.filtrations.push_back(std::move(nf));
            } else {
                fail(head.line, "unexpected directive '" + head.t[0] + "'");
            }
        }
        for (std::size_t w = 0; w < in.omega.size(); ++w)
            if (!have_delta[w])
                throw parse_error("element '" + in.omega.elements[w] + "' has no delta block");
    } catch (const parse_error& e) {
        throw parse_error(what + ": " + e.what());
    } catch (const error& e) {
        throw parse_error(what + ": " + e.what());
    }
    return in;
}

InputFile parse_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw parse_error(path + ": cannot open");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_string(buf.str(), path);
}

namespace {

void emit_rep(std::ostringstream& os, const BoundQuiverAlgebra& alg, const Representation& rep) {
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        if (rep.dims[v] > 0)
            os << "  vertex " << alg.quiver.vertices[v] << " dim " << rep.dims[v] << "\n";
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Mat& m = rep.maps[a];
        if (m.is_zero()) continue;
        os << "  map " << alg.quiver.arrows[a].name;
        for (std::uint32_t r = 0; r < m.rows; ++r) {
            if (r > 0) os << " ;";
            for (std::uint32_t cc = 0; cc < m.cols; ++cc) os << " " << m.at(r, cc);
        }
        os << "\n";
    }
    os << "end\n";
}

}  // namespace

std::string serialize(const InputFile& in) {
    std::ostringstream os;
    const BoundQuiverAlgebra& alg = in.algebra;
    os << "field " << alg.field.p << "\n\nquiver\n";
    for (const std::string& v : alg.quiver.vertices) os << "  vertex " << v << "\n";
    for (const Arrow& a : alg.quiver.arrows)
        os << "  arrow " << a.name << " " << alg.quiver.vertices[a.src] << " "
           << alg.quiver.vertices[a.tgt] << "\n";
    os << "end\n";
    if (!alg.relations.empty()) {
        os << "\nrelations\n";
        for (const Relation& rel : alg.relations) {
            os << "  relation";
            for (std::size_t t = 0; t < rel.terms.size(); ++t) {
                if (t > 0) os << " +";
                os << " " << rel.terms[t].coeff;
                for (std::size_t a : rel.terms[t].arrows)
                    os << " " << alg.quiver.arrows[a].name;
            }
            os << "\n";
        }
        os << "end\n";
    }
    os << "\nomega\n";
    for (const std::string& w : in.omega.elements) os << "  element " << w << "\n";
    for (std::size_t i = 0; i < in.omega.size(); ++i)
        for (std::size_t j = 0; j < in.omega.size(); ++j)
            if (i != j && in.omega.le(i, j))
                os << "  leq " << in.omega.elements[i] << " " << in.omega.elements[j] << "\n";
    os << "end\n";
    for (std::size_t w = 0; w < in.omega.size(); ++w) {
        os << "\ndelta " << in.omega.elements[w] << "\n";
        emit_rep(os, alg, in.delta[w]);
    }
    for (const auto& [name, rep] : in.modules) {
        os << "\nmodule " << name << "\n";
        emit_rep(os, alg, rep);
    }
    for (const NamedFiltration& f : in.filtrations) {
        os << "\nfiltration " << f.name << " of " << f.module_name << "\n";
        for (std::size_t s = 0; s < f.labels.size(); ++s) {
            os << "  step " << in.omega.elements[f.labels[s]] << "\n";
            for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
                const Subspace& sp = f.chain_tail[s].spaces[v];
                if (sp.dim() == 0) continue;
                os << "    vertex " << alg.quiver.vertices[v] << " basis";
                for (std::uint32_t r = 0; r < sp.dim(); ++r) {
                    if (r > 0) os << " ;";
                    for (std::uint32_t cc = 0; cc < sp.ambient; ++cc)
                        os << " " << sp.basis.at(r, cc);
                }
                os << "\n";
            }
            os << "  end\n";
        }
        os << "end\n";
    }
    return os.str();
}

const Representation& resolve_module(const InputFile& in, const std::string& name) {
    for (const auto& [nm, rep] : in.modules)
        if (nm == name) return rep;
    for (std::size_t w = 0; w < in.omega.size(); ++w)
        if (in.omega.elements[w] == name) return in.delta[w];
    throw error("unknown module '" + name + "'");
}

namespace {

json dims_json(const std::vector<std::uint32_t>& dims) {
    json a = json::array();
    for (std::uint32_t d : dims) a.push_back(d);
    return a;
}

json chain_json(const std::vector<Submodule>& chain) {
    json a = json::array();
    for (const Submodule& s : chain) a.push_back(dims_json(s.dims()));
    return a;
}

json labels_json(const HomologicalSystem& sys, const std::vector<std::size_t>& labels) {
    json a = json::array();
    for (std::size_t w : labels) a.push_back(sys.omega.elements[w]);
    return a;
}

json filtration_json(const HomologicalSystem& sys, const Filtration& f) {
    return json{{"chain", chain_json(f.chain)}, {"labels", labels_json(sys, f.labels)}};
}

const NamedFiltration& resolve_filtration(const InputFile& in, const std::string& name) {
    for (const NamedFiltration& f : in.filtrations)
        if (f.name == name) return f;
    throw error("unknown filtration '" + name + "'");
}

void need_args(const std::vector<std::string>& args, std::size_t n, const char* usage) {
    if (args.size() != n) throw error(std::string("usage: ") + usage);
}

// Build a Filtration from a named chain; library verdicts pass through.
FiltrationBuild build_named(const InputFile& in, const HomologicalSystem& sys,
                            const NamedFiltration& nf, const SearchOptions& opts, Rng& rng) {
    const Representation& mod = resolve_module(in, nf.module_name);
    std::vector<Submodule> chain{zero_submodule(sys.algebra, mod)};
    chain.insert(chain.end(), nf.chain_tail.begin(), nf.chain_tail.end());
    return make_filtration(sys, mod, chain, nf.labels, opts, rng);
}

}  // namespace

CommandResult run_command(const InputFile& in, const std::string& command,
                          const std::vector<std::string>& args, std::uint64_t seed,
                          const SearchOptions& opts) {
    json rep;
    rep["command"] = command;
    rep["digest"] = in.digest;
    rep["seed"] = seed;
    json details = json::object();
    std::string verdict = "ok";
    int code = 0;
    try {
        Rng rng = make_rng(seed, 1);
        HomologicalSystem sys = make_system(in.algebra, in.omega, in.delta);

        if (command == "check") {
            SystemCheck sc = check_system(sys, opts, rng);
            json viol = json::array();
            for (const AxiomViolation& v : sc.violations)
                viol.push_back({{"axiom", v.axiom},
                                {"pair", {sys.omega.elements[v.w1], sys.omega.elements[v.w2]}},
                                {"detail", v.detail}});
            details["violations"] = viol;
            details["unverified"] = sc.unverified;
            json hd = json::object(), ed = json::object();
            for (std::size_t i = 0; i < sys.size(); ++i) {
                json hrow = json::object(), erow = json::object();
                for (std::size_t j = 0; j < sys.size(); ++j) {
                    hrow[sys.omega.elements[j]] = sc.hom_dims.empty() ? 0 : sc.hom_dims[i][j];
                    erow[sys.omega.elements[j]] = sc.ext_dims.empty() ? 0 : sc.ext_dims[i][j];
                }
                hd[sys.omega.elements[i]] = hrow;
                ed[sys.omega.elements[i]] = erow;
            }
            details["hom_dims"] = hd;
            details["ext_dims"] = ed;
            if (sc.verdict == SystemCheck::Verdict::ok) {
                if (!remark4_consequences(sys).empty())
                    throw error("internal contradiction: height consequences failed on a "
                                "checked system");
                details["height_consequences"] = "ok";
                json hs = json::object();
                for (std::size_t w = 0; w < sys.size(); ++w)
                    hs[sys.omega.elements[w]] = sys.height_of(w);
                details["heights"] = hs;
            } else if (sc.verdict == SystemCheck::Verdict::violated) {
                verdict = "violated";
                code = 1;
            } else {
                verdict = "unverified";
                code = 3;
            }
        } else if (command == "height") {
            need_args(args, 0, "height");
            json hs = json::object();
            for (std::size_t w = 0; w < sys.size(); ++w)
                hs[sys.omega.elements[w]] = sys.height_of(w);
            details["heights"] = hs;
            details["max_height"] = sys.max_height();
        } else if (command == "hom" || command == "ext") {
            need_args(args, 2, command == "hom" ? "hom <X> <Y>" : "ext <X> <Y>");
            const Representation& x = resolve_module(in, args[0]);
            const Representation& y = resolve_module(in, args[1]);
            details["pair"] = {args[0], args[1]};
            if (command == "hom") {
                details["dim"] = hom_space(sys.algebra, x, y).dim();
            } else {
                ExtSpace es = ext_space(sys.algebra, x, y);
                details["dim"] = es.dim();
                details["cocycles"] = es.cocycles.dim();
                details["coboundaries"] = es.coboundaries.dim();
            }
        } else if (command == "verify") {
            need_args(args, 1, "verify <filtration>");
            FiltrationBuild b = build_named(in, sys, resolve_filtration(in, args[0]), opts, rng);
            details["filtration"] = args[0];
            if (b.verdict.ok()) {
                details["length"] = b.filtration->length();
                details["labels"] = labels_json(sys, b.filtration->labels);
            } else {
                verdict = b.verdict.status == FiltrationVerdict::Status::failed ? "failed"
                                                                                : "unverified";
                code = verdict == "failed" ? 1 : 3;
                details["reason"] = b.verdict.reason;
                if (b.verdict.failing_step) details["step"] = *b.verdict.failing_step;
            }
        } else if (command == "normalize") {
            need_args(args, 1, "normalize <filtration>");
            FiltrationBuild b = build_named(in, sys, resolve_filtration(in, args[0]), opts, rng);
            if (!b.verdict.ok()) {
                verdict = "failed";
                code = 1;
                details["reason"] = "the input is not a valid filtration: " + b.verdict.reason;
            } else {
                Filtration nf = normalize(sys, *b.filtration, opts, rng);
                details["before"] = filtration_json(sys, *b.filtration);
                details["after"] = filtration_json(sys, nf);
            }
        } else if (command == "hfilt") {
            need_args(args, 1, "hfilt <module>");
            const Representation& m = resolve_module(in, args[0]);
            SearchResult<HFiltration> hf = h_filtration_canonical(sys, m, opts, rng);
            details["module"] = args[0];
            if (hf.found()) {
                json layers = json::array();
                for (std::uint32_t i = 1; i <= hf.value->top_height() + 1; ++i)
                    layers.push_back({{"index", i}, {"dims", dims_json(hf.value->w(i).dims())}});
                details["layers"] = layers;
                json mult = json::object();
                for (const auto& [key, n] : hf.value->mult)
                    mult["height " + std::to_string(key.first)][sys.omega.elements[key.second]] =
                        n;
                details["mult"] = mult;
                details["flattened"] = filtration_json(sys, flatten(sys, *hf.value, opts, rng));
            } else if (hf.absent()) {
                verdict = "not-filtered";
                code = 1;
            } else {
                verdict = "unverified";
                code = 3;
            }
        } else if (command == "decompose") {
            need_args(args, 3, "decompose <module> <summand1> <summand2>");
            const Representation& m = resolve_module(in, args[0]);
            const Representation& m1 = resolve_module(in, args[1]);
            const Representation& m2 = resolve_module(in, args[2]);
            DirectSum ds = direct_sum(sys.algebra, m1, m2);
            SearchResult<HomTuple> iso = iso_test(sys.algebra, ds.rep, m, opts, rng);
            if (iso.absent()) {
                verdict = "not-a-biproduct";
                code = 1;
                details["reason"] = args[0] + " is not isomorphic to " + args[1] + " + " + args[2];
            } else if (iso.exhausted()) {
                verdict = "unverified";
                code = 3;
            } else {
                HomTuple inj1 = hom_compose(*iso.value, ds.inj1);
                HomTuple inj2 = hom_compose(*iso.value, ds.inj2);
                SearchResult<SummandDecomposition> dec =
                    decompose_summands(sys, m, m1, inj1, m2, inj2, opts, rng);
                if (dec.absent()) {
                    verdict = "not-filtered";
                    code = 1;
                } else if (dec.exhausted()) {
                    verdict = "unverified";
                    code = 3;
                } else {
                    details["first"] = filtration_json(sys, dec.value->first);
                    details["second"] = filtration_json(sys, dec.value->second);
                    json counts = json::object();
                    for (const auto& [w, n] : dec.value->whole_counts)
                        counts[sys.omega.elements[w]] = n;
                    details["counts"] = counts;
                }
            }
        } else {
            throw error("unknown command '" + command + "'");
        }
    } catch (const std::exception& e) {
        verdict = "error";
        code = 2;
        details["message"] = e.what();
    }
    rep["verdict"] = verdict;
    rep["exit"] = code;
    rep["details"] = details;
    return {rep, code};
}

namespace {

std::string scalar_text(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void render(std::ostringstream& os, const json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n";
                render(os, it.value(), indent + 1);
            } else {
                os << pad << it.key() << ": " << scalar_text(it.value()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const json& item : j) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render(os, item, indent + 1);
            } else {
                os << pad << "- " << scalar_text(item) << "\n";
            }
        }
        if (j.empty()) os << pad << "(none)\n";
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

std::string render_human(const json& report) {
    std::ostringstream os;
    for (const char* key : {"command", "input", "digest", "seed", "verdict", "exit"})
        if (report.contains(key)) os << key << ": " << scalar_text(report.at(key)) << "\n";
    if (report.contains("details") && !report.at("details").empty()) {
        os << "details:\n";
        render(os, report.at("details"), 1);
    }
    return os.str();
}

}  // namespace homsys::io
