#include "lclab/jobs.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lclab {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string slurp(const std::string& path, const char* what)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput(std::string("cannot read ") + what + " file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::int64_t parse_int(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw InvalidInput("bad value for " + key + ": '" + value + "'");
    return v;
}

struct LoadedIdeal {
    CoefficientRing ring;
    int nvars = 0;
    std::vector<Poly> gens;
};

// Family generators are integral; file generators live over the ring of the header.
LoadedIdeal load_ideal(const JobSpec& s)
{
    if (!s.family.empty()) {
        auto f = IdealFamilySpec::parse(s.family);
        auto zz = CoefficientRing::integers();
        return {zz, f.nvars(), f.generators(zz)};
    }
    if (!s.ideal) throw InvalidInput("an ideal is required (--ideal <file> or --family <spec>)");
    auto ring = CoefficientRing::from_characteristic(s.ideal->characteristic);
    LoadedIdeal out{ring, s.ideal->nvars, {}};
    for (const auto& g : s.ideal->generators) out.gens.push_back(Poly::parse(g, ring, out.nvars));
    return out;
}

LoadedIdeal over_prime(const LoadedIdeal& in, std::uint64_t p)
{
    if (in.ring.kind == CoefficientRing::Kind::PrimeField && in.ring.p != p)
        throw InvalidInput("ideal is over " + in.ring.descriptor() + " but p = " + std::to_string(p));
    auto fp = CoefficientRing::prime_field(p);
    LoadedIdeal out{fp, in.nvars, {}};
    for (const auto& g : in.gens) {
        auto r = g.change_ring(fp);
        if (!r.is_zero()) out.gens.push_back(r);
    }
    return out;
}

StabilizeOptions stage_options(const JobSpec& s)
{
    StabilizeOptions o;
    o.t_max = static_cast<unsigned>(s.get("t_max", o.t_max));
    o.window = static_cast<unsigned>(s.get("window", o.window));
    return o;
}

std::uint64_t prime_param(const JobSpec& s, const char* what)
{
    auto p = s.get("p");
    if (p < 2) throw InvalidInput(std::string(what) + ": p must be a prime");
    require_prime(static_cast<std::uint64_t>(p), what);
    return static_cast<std::uint64_t>(p);
}

Json run_frobenius(const JobSpec& s, int& exit_code)
{
    auto p = prime_param(s, "frobenius");
    auto id = over_prime(load_ideal(s), p);
    int j = static_cast<int>(s.get("j"));
    try {
        auto v = frobenius_matrix(p, id.nvars, id.gens, j, stage_options(s));
        return frobenius_json(id.ring, id.nvars, id.gens, v);
    } catch (const VerdictWithheld& e) {
        exit_code = 2;
        return undetected_frobenius_json(id.ring, id.nvars, id.gens, p, j, e.what());
    }
}

Json run_torsion(const JobSpec& s)
{
    auto p = prime_param(s, "torsion");
    auto id = load_ideal(s);
    if (id.ring.kind != CoefficientRing::Kind::Integers)
        throw InvalidInput("torsion needs an ideal over the integers (char=0)");
    auto r = torsion_obstruction(id.nvars, id.gens, p, static_cast<int>(s.get("k")), stage_options(s));
    return torsion_json(id.nvars, id.gens, r);
}

LoadedIdeal strand_ideal(const JobSpec& s)
{
    auto id = load_ideal(s);
    if (s.has("p")) return over_prime(id, prime_param(s, s.command.c_str()));
    return id;
}

Json run_lcdim(const JobSpec& s)
{
    auto id = strand_ideal(s);
    auto st = stabilize(id.ring, id.nvars, id.gens, static_cast<int>(s.get("j")), static_cast<int>(s.get("s")),
                        stage_options(s));
    Json out = stable_strand_json(st);
    out["ideal"] = ideal_json(id.ring, id.nvars, id.gens);
    return out;
}

Json run_ainv(const JobSpec& s)
{
    auto id = strand_ideal(s);
    auto method = s.method == "hilbert" ? AInvariantMethod::Hilbert : AInvariantMethod::Strand;
    auto r = a_invariant(id.ring, id.nvars, id.gens, method, s.cm, stage_options(s));
    Json out = a_invariant_json(r);
    out["ideal"] = ideal_json(id.ring, id.nvars, id.gens);
    return out;
}

SimplicialComplex load_complex(const std::string& text)
{
    auto t = trim(text);
    if (t.rfind("sr ", 0) == 0) {
        auto f = IdealFamilySpec::parse(t);
        return SimplicialComplex::from_nonfaces(f.n, f.nonfaces);
    }
    return SimplicialComplex::parse(t);
}

Json run_hochster(const JobSpec& s)
{
    auto p = prime_param(s, "hochster");
    auto c = load_complex(s.complex);
    int j = static_cast<int>(s.get("j"));
    int n = c.nvertices();
    if (j < 0 || j > n) throw InvalidInput("hochster: j must lie in [0, n]");
    auto fp = CoefficientRing::prime_field(p);
    auto gens = stanley_reisner(n, c.nonfaces(), fp);
    std::size_t dim = reduced_cohomology(c, j - 1, p);
    Json out = {{"complex", c.to_string()},
                {"ideal", ideal_json(fp, n, gens)},
                {"p", p},
                {"j", j},
                {"f_vector", c.f_vector()},
                {"reduced_cohomology_degree", j - 1},
                {"dim", dim},
                {"crosscheck", nullptr}};
    if (s.crosscheck) {
        auto st = stabilize(fp, n, gens, j, 0, stage_options(s));
        out["crosscheck"] = {{"koszul_dim", st.dim},
                             {"stage_T", st.stage},
                             {"transition_dims", st.transition_dims},
                             {"agree", st.dim == dim}};
    }
    return out;
}

Json run_ffmod(const JobSpec& s, int& exit_code)
{
    auto field = GaloisField::parse(s.field);
    auto blocks = parse_matrix_blocks(s.matrix_text, field);
    auto block = [&](const std::string& name) -> const Matrix& {
        auto it = blocks.find(name);
        if (it == blocks.end()) throw InvalidInput("matrix file lacks block '" + name + "'");
        return it->second;
    };
    Json out = {{"field", field.descriptor()}, {"operation", s.mode}};
    if (s.mode == "split") {
        PLinearModule M(field, block("M")), N(field, block("N"));
        auto r = split_surjection(M, N, block("proj"), static_cast<unsigned>(s.get("budget", 3)));
        out["M"] = matrix_json(M.A);
        out["N"] = matrix_json(N.A);
        out["proj"] = matrix_json(block("proj"));
        out["split"] = split_json(r);
        if (!r.ok) exit_code = 2;
        return out;
    }
    PLinearModule m(field, block("A"));
    out["matrix"] = matrix_json(m.A);
    out["dim"] = m.dim();
    if (s.mode == "stable") {
        auto b = stable_image(m);
        out["stable_image"] = matrix_json(b);
        out["rank"] = b.rows;
    } else if (s.mode == "nil") {
        auto b = nilpotent_part(m);
        auto nil = is_nilpotent(m);
        out["nilpotent_part"] = matrix_json(b);
        out["rank"] = b.rows;
        out["nilpotent"] = nil.nilpotent;
        out["nilpotency_index"] = nil.nilpotent ? Json(nil.index) : Json(nullptr);
    } else {
        auto b = fixed_points(m);
        out["fixed_points"] = matrix_json(b);
        out["rank"] = b.rows;
    }
    return out;
}

Json run_identity(const JobSpec& s)
{
    if (s.has("k")) return {{"identity", identity_json(verify_2x3_identity(static_cast<unsigned>(s.get("k"))))}};
    auto p = prime_param(s, "identity2x3");
    return {{"identity", modp_json(verify_2x3_modp_reduction(p, static_cast<unsigned>(s.get("e"))))}};
}

Json run_cert(const JobSpec& s)
{
    if (s.mode == "barile") return certificate_json(barile_certificate(static_cast<int>(s.get("bound", 10))));
    return certificate_json(valla_certificate(static_cast<int>(s.get("bound", 6))));
}

Json run_predict(const JobSpec& s)
{
    auto f = IdealFamilySpec::parse(s.family);
    auto ch = static_cast<std::uint64_t>(s.get("char", 0));
    return {{"family", f.to_string()},
            {"dim", s.get("dim")},
            {"invariants", invariants_json(family_invariants(f, ch))},
            {"prediction", prediction_json(vanishing_predict(s.get("dim"), f))}};
}

Json run_localize(const JobSpec& s)
{
    auto r = localization_check(static_cast<int>(s.get("m")), static_cast<int>(s.get("n")),
                                static_cast<int>(s.get("t")), static_cast<int>(s.get("N")),
                                static_cast<int>(s.get("D")));
    return localization_json(r);
}

void require_params(const JobSpec& s, std::initializer_list<const char*> keys)
{
    for (const char* k : keys)
        if (!s.has(k)) throw InvalidInput(s.command + ": missing --" + k);
}

void require_ideal(const JobSpec& s)
{
    if (s.family.empty() == !s.ideal) throw InvalidInput(s.command + ": give exactly one of --ideal and --family");
}

} // namespace

IdealText IdealText::parse(const std::string& text)
{
    IdealText out;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line.rfind("ring:", 0) != 0) throw InvalidInput("ideal file must start with 'ring: char=<p|0> vars=<n>'");
            std::istringstream hs(line.substr(5));
            std::string tok;
            bool have_char = false, have_vars = false;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw InvalidInput("bad ring header token '" + tok + "'");
                auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "char") {
                    auto c = parse_int("char", val);
                    if (c < 0) throw InvalidInput("char must be 0 or a prime");
                    if (c > 0) require_prime(static_cast<std::uint64_t>(c), "ring header");
                    out.characteristic = static_cast<std::uint64_t>(c);
                    have_char = true;
                } else if (key == "vars") {
                    out.nvars = static_cast<int>(parse_int("vars", val));
                    if (out.nvars < 1 || out.nvars > 20) throw InvalidInput("vars must lie in [1, 20]");
                    have_vars = true;
                } else {
                    throw InvalidInput("unknown ring header key '" + key + "'");
                }
            }
            if (!have_char || !have_vars) throw InvalidInput("ring header needs both char= and vars=");
            header = true;
            continue;
        }
        out.generators.push_back(line);
    }
    if (!header) throw InvalidInput("ideal file has no ring header");
    // parse once to reject malformed generators before any computation
    auto ring = CoefficientRing::from_characteristic(out.characteristic);
    for (auto& g : out.generators) g = Poly::parse(g, ring, out.nvars).to_string();
    return out;
}

IdealText IdealText::read_file(const std::string& path)
{
    return parse(slurp(path, "ideal"));
}

std::map<std::string, Matrix> parse_matrix_blocks(const std::string& text, const GaloisField& field)
{
    std::map<std::string, std::vector<std::vector<GaloisField::Elem>>> rows;
    std::vector<std::string> order;
    std::string current = "A";
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.back() == ':') {
            current = trim(line.substr(0, line.size() - 1));
            if (rows.count(current)) throw InvalidInput("duplicate matrix block '" + current + "'");
            rows[current];
            continue;
        }
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<GaloisField::Elem> row;
        std::string tok;
        while (ls >> tok) row.push_back(field.parse_elem(tok));
        rows[current].push_back(row);
    }
    std::map<std::string, Matrix> out;
    for (const auto& [name, rs] : rows) {
        if (rs.empty()) throw InvalidInput("matrix block '" + name + "' is empty");
        Matrix m(rs.size(), rs[0].size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != m.cols) throw InvalidInput("ragged rows in matrix block '" + name + "'");
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        }
        out.emplace(name, std::move(m));
    }
    if (out.empty()) throw InvalidInput("matrix file is empty");
    return out;
}

std::int64_t JobSpec::get(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end()) throw InvalidInput(command + ": missing --" + key);
    return it->second;
}

std::int64_t JobSpec::get(const std::string& key, std::int64_t fallback) const
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void JobSpec::resolve()
{
    if (!ideal_file.empty() && !ideal) ideal = IdealText::read_file(ideal_file);
    if (!matrix_file.empty() && matrix_text.empty()) matrix_text = slurp(matrix_file, "matrix");
}

void JobSpec::validate() const
{
    static const std::set<std::string> commands = {"frobenius", "torsion", "lcdim",  "ainv",    "hochster",
                                                   "ffmod",     "identity2x3", "cert", "predict", "localize"};
    if (!commands.count(command)) throw InvalidInput("unknown subcommand '" + command + "'");
    for (const auto& [k, v] : params)
        if (k != "s" && k != "j" && v < 0) throw InvalidInput(command + ": --" + k + " must be nonnegative");
    if (has("t_max") && (get("t_max") < 1 || get("t_max") > 64)) throw InvalidInput("--t-max must lie in [1, 64]");
    if (has("window") && get("window") < 1) throw InvalidInput("--window must be positive");

    if (command == "frobenius") {
        require_ideal(*this);
        require_params(*this, {"p", "j"});
    } else if (command == "torsion") {
        require_ideal(*this);
        require_params(*this, {"p", "k"});
    } else if (command == "lcdim") {
        require_ideal(*this);
        require_params(*this, {"j", "s"});
    } else if (command == "ainv") {
        require_ideal(*this);
        if (!method.empty() && method != "strand" && method != "hilbert")
            throw InvalidInput("ainv: --method must be strand or hilbert");
    } else if (command == "hochster") {
        if (complex.empty()) throw InvalidInput("hochster: missing --sr");
        require_params(*this, {"j", "p"});
    } else if (command == "ffmod") {
        if (mode != "stable" && mode != "nil" && mode != "fixed" && mode != "split")
            throw InvalidInput("ffmod: operation must be stable, nil, fixed or split");
        if (field.empty()) throw InvalidInput("ffmod: missing --field");
        if (matrix_text.empty()) throw InvalidInput("ffmod: missing --matrix");
    } else if (command == "identity2x3") {
        if (has("k") == (has("p") || has("e"))) throw InvalidInput("identity2x3: give either --k or both --p and --e");
        if (!has("k")) require_params(*this, {"p", "e"});
    } else if (command == "cert") {
        if (mode != "barile" && mode != "valla") throw InvalidInput("cert: name must be barile or valla");
    } else if (command == "predict") {
        if (family.empty()) throw InvalidInput("predict: missing --family");
        require_params(*this, {"dim"});
    } else if (command == "localize") {
        if (!family.empty() && family != "generic") throw InvalidInput("localize: only the generic family is supported");
        require_params(*this, {"m", "n", "t", "N", "D"});
    }
}

Json JobSpec::to_json() const
{
    Json out = {{"command", command}, {"params", params}, {"stage_cap", strand_cap()}};
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) out[key] = v;
    };
    put("mode", mode);
    put("family", family);
    put("ideal_file", ideal_file);
    put("complex", complex);
    put("field", field);
    put("matrix_file", matrix_file);
    put("matrix_text", matrix_text);
    put("method", method);
    put("output", output);
    if (ideal)
        out["ideal"] = {{"char", ideal->characteristic}, {"vars", ideal->nvars}, {"generators", ideal->generators}};
    if (cm) out["cm"] = true;
    if (crosscheck) out["crosscheck"] = true;
    return out;
}

JobSpec JobSpec::from_json(const Json& j)
{
    JobSpec s;
    try {
        s.command = j.at("command").get<std::string>();
        auto str = [&](const char* key, std::string& dst) {
            if (j.contains(key)) dst = j.at(key).get<std::string>();
        };
        str("mode", s.mode);
        str("family", s.family);
        str("ideal_file", s.ideal_file);
        str("complex", s.complex);
        str("field", s.field);
        str("matrix_file", s.matrix_file);
        str("matrix_text", s.matrix_text);
        str("method", s.method);
        str("output", s.output);
        if (j.contains("params")) s.params = j.at("params").get<std::map<std::string, std::int64_t>>();
        if (j.contains("ideal")) {
            const auto& id = j.at("ideal");
            std::ostringstream text;
            text << "ring: char=" << id.at("char").get<std::uint64_t>() << " vars=" << id.at("vars").get<int>() << "\n";
            for (const auto& g : id.at("generators")) text << g.get<std::string>() << "\n";
            s.ideal = IdealText::parse(text.str());
        }
        s.cm = j.value("cm", false);
        s.crosscheck = j.value("crosscheck", false);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed job: ") + e.what());
    }
    return s;
}

JobResult run_job(JobSpec spec)
{
    spec.resolve();
    spec.validate();
    JobResult res;
    const auto& c = spec.command;
    try {
        if (c == "frobenius") res.report = run_frobenius(spec, res.exit_code);
        else if (c == "torsion") res.report = run_torsion(spec);
        else if (c == "lcdim") res.report = run_lcdim(spec);
        else if (c == "ainv") res.report = run_ainv(spec);
        else if (c == "hochster") res.report = run_hochster(spec);
        else if (c == "ffmod") res.report = run_ffmod(spec, res.exit_code);
        else if (c == "identity2x3") res.report = run_identity(spec);
        else if (c == "cert") res.report = run_cert(spec);
        else if (c == "predict") res.report = run_predict(spec);
        else res.report = run_localize(spec);
    } catch (const VerdictWithheld& e) {
        res.exit_code = 2;
        res.report = {{"verdict", "withheld"}, {"reason", e.what()}};
    }
    res.report["job"] = spec.to_json();
    return res;
}

} // namespace lclab
