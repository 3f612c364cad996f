#include "qi/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qi/hilbert.hpp"
#include "qi/parse.hpp"

namespace qi::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxTruncation = 64;

struct JobConfig {
    std::string pair;
    std::string spec_file;
    std::string config_file;
    std::string m_text = "0";
    std::string variant = "flag";
    std::string family;  // bcom: u | su | sp
    int n = 0;           // bcom rank
    int truncate = 24;
    int window = 2;
    std::string format = "text";
    std::string poly;
    bool want_basis = false;
    bool want_hilbert = false;
};

std::vector<int> parse_multiplicities(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw CLI::ValidationError("--m", "empty multiplicity");
        for (char c : cur)
            if (!isdigit(static_cast<unsigned char>(c)))
                throw CLI::ValidationError("--m", "multiplicities must be non-negative integers");
        out.push_back(atoi(cur.c_str()));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur.push_back(c);
    }
    flush();
    return out;
}

void apply_config_file(JobConfig& cfg) {
    if (cfg.config_file.empty()) return;
    std::ifstream in(cfg.config_file);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + cfg.config_file);
    auto j = nlohmann::json::parse(in);
    if (j.contains("pair")) cfg.pair = j["pair"].get<std::string>();
    if (j.contains("spec")) cfg.spec_file = j["spec"].get<std::string>();
    if (j.contains("m")) {
        if (j["m"].is_number_integer()) cfg.m_text = std::to_string(j["m"].get<int>());
        else cfg.m_text = j["m"].get<std::string>();
    }
    if (j.contains("variant")) cfg.variant = j["variant"].get<std::string>();
    if (j.contains("family")) cfg.family = j["family"].get<std::string>();
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("truncate")) cfg.truncate = j["truncate"].get<int>();
    if (j.contains("window")) cfg.window = j["window"].get<int>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("poly")) cfg.poly = j["poly"].get<std::string>();
}

void check_common(const JobConfig& cfg) {
    if (cfg.truncate < 0 || cfg.truncate > kMaxTruncation)
        throw CLI::ValidationError("--truncate", "must be between 0 and 64");
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
        throw CLI::ValidationError("--format", "must be text, json or csv");
}

QuasiSpec build_spec(const JobConfig& cfg) {
    auto ms = parse_multiplicities(cfg.m_text);
    if (cfg.variant == "filtered") {
        FilteredSpec chain;
        if (!cfg.spec_file.empty()) {
            std::ifstream in(cfg.spec_file);
            if (!in) throw CLI::ValidationError("--spec", "cannot open " + cfg.spec_file);
            std::stringstream buf;
            buf << in.rdbuf();
            chain = filtered_from_json(buf.str());
        } else {
            chain = u3_chain();  // built-in default chain
        }
        return filtered_join_spec(std::move(chain), ms);
    }
    if (cfg.variant == "bcom") {
        BComFamily fam;
        if (cfg.family == "u") fam = BComFamily::U;
        else if (cfg.family == "su") fam = BComFamily::SU;
        else if (cfg.family == "sp") fam = BComFamily::Sp;
        else throw CLI::ValidationError("--family", "must be u, su or sp");
        if (cfg.n < 1 || cfg.n > 4) throw CLI::ValidationError("--n", "rank out of range");
        return bcom_spec(fam, cfg.n, ms.at(0));
    }
    if (!pair_exists(cfg.pair)) throw CLI::ValidationError("--pair", "unknown pair " + cfg.pair);
    PairSpec pair = find_pair(cfg.pair);
    if (cfg.variant == "flag") return flag_spec(std::move(pair), ms.at(0));
    if (cfg.variant == "t-equiv") return tequiv_spec(std::move(pair), ms.at(0));
    throw CLI::ValidationError("--variant", "must be flag, t-equiv, bcom or filtered");
}

void emit_dimension_table(const JobConfig& cfg, const std::string& label,
                          const std::vector<Integer>& coh, std::ostream& out) {
    if (cfg.format == "csv") {
        out << "coh_degree,dimension\n";
        for (size_t d = 0; d < coh.size(); d += 2) out << d << "," << coh[d].get_str() << "\n";
        return;
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["label"] = label;
        j["coefficients"] = ordered_json::array();
        for (size_t d = 0; d < coh.size(); d += 2)
            j["coefficients"].push_back({d, coh[d].get_str()});
        out << j.dump(2) << "\n";
        return;
    }
    out << label << "\n";
    for (size_t d = 0; d < coh.size(); d += 2)
        out << "  coh degree " << d << ": " << coh[d].get_str() << "\n";
}

HilbertSeries spec_closed_form(const QuasiSpec& spec) {
    switch (spec.variant) {
        case Variant::Flag: return closed_form_flag(*spec.pair, spec.m);
        case Variant::BCom: return closed_form_bcom(*spec.family, spec.bcom_n, spec.m);
        default: return from_basis(qm_basis(spec));
    }
}

int cmd_catalog(const JobConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        out << catalog_json() << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "name,n,k,order,degrees\n";
        for (auto& p : catalog_list()) {
            out << p.name << "," << p.n << "," << p.k << "," << p.weyl.order() << ",";
            for (size_t i = 0; i < p.degrees.size(); ++i) out << (i ? " " : "") << p.degrees[i];
            out << "\n";
        }
        return 0;
    }
    for (auto& p : catalog_list()) {
        out << p.name << "  (" << p.description << ")\n";
        out << "  n=" << p.n << " k=" << p.k << " |W|=" << p.weyl.order() << " degrees=";
        for (size_t i = 0; i < p.degrees.size(); ++i) out << (i ? "," : "") << p.degrees[i];
        out << "\n  theta = " << p.euler_theta.str() << "\n";
        if (p.ktheory) out << "  Theta = " << p.ktheory->Theta.str() << "\n";
    }
    return 0;
}

int cmd_basis(const JobConfig& cfg, std::ostream& out) {
    QuasiSpec spec = build_spec(cfg);
    FreeBasis basis = qm_basis(spec);
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        if (spec.pair) j["pair"] = spec.pair->name;
        if (spec.family) j["family"] = bcom_family_name(*spec.family);
        if (spec.filtered) j["spec"] = spec.filtered->name;
        j["m"] = parse_multiplicities(cfg.m_text);
        j["variant"] = variant_name(spec.variant);
        j["rank"] = basis.rank();
        j["elements"] = ordered_json::array();
        auto cohs = basis.coh_degrees();
        for (int i = 0; i < basis.rank(); ++i)
            j["elements"].push_back({{"coh_degree", cohs[i]}, {"poly", basis.elements[i].str()}});
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "coh_degree,poly\n";
        auto cohs = basis.coh_degrees();
        for (int i = 0; i < basis.rank(); ++i)
            out << cohs[i] << ",\"" << basis.elements[i].str() << "\"\n";
        return 0;
    }
    out << spec.label() << ": free module of rank " << basis.rank() << "\n";
    auto cohs = basis.coh_degrees();
    for (int i = 0; i < basis.rank(); ++i)
        out << "  [coh " << cohs[i] << "] " << basis.elements[i].str() << "\n";
    return 0;
}

int cmd_hilbert(const JobConfig& cfg, std::ostream& out) {
    QuasiSpec spec = build_spec(cfg);
    HilbertSeries series = spec_closed_form(spec);
    auto coh = series.expand_coh(cfg.truncate);
    emit_dimension_table(cfg, spec.label() + "  " + series.str(), coh, out);
    return 0;
}

int cmd_member(const JobConfig& cfg, std::ostream& out) {
    QuasiSpec spec = build_spec(cfg);
    if (cfg.poly.empty()) throw CLI::ValidationError("--poly", "missing polynomial");
    Ring ring = spec.pair ? spec.pair->ring
                          : (spec.filtered ? spec.filtered->ring : xy_ring(spec.bcom_n));
    if (spec.variant == Variant::TEquiv || spec.variant == Variant::BCom)
        ring = xy_ring(spec.pair ? spec.pair->n : spec.bcom_n);
    Polynomial f = parse_poly(cfg.poly, ring);
    auto res = is_member(f, spec);
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["spec"] = spec.label();
        j["poly"] = f.str();
        j["member"] = res.member;
        if (!res.member && res.witness) j["witness"] = res.witness->str();
        if (!res.detail.empty()) j["detail"] = res.detail;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (res.member) out << "member\n";
    else out << "not a member (" << res.detail << ")\n";
    return 0;
}

int cmd_ktheory(const JobConfig& cfg, std::ostream& out) {
    if (!pair_exists(cfg.pair)) throw CLI::ValidationError("--pair", "unknown pair " + cfg.pair);
    PairSpec pair = find_pair(cfg.pair);
    if (!pair.ktheory)
        throw CLI::ValidationError("--pair", "pair " + cfg.pair + " has no K-theory entry");
    int m = parse_multiplicities(cfg.m_text).at(0);
    auto rep = k_presentation_check(*pair.ktheory, m, cfg.window);
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["ring"] = rep.ring;
        j["m"] = rep.m;
        j["window"] = rep.window;
        j["monomials_checked"] = rep.monomials_checked;
        j["members"] = rep.members;
        j["expressed"] = rep.expressed;
        j["synthesized_checked"] = rep.synth_checked;
        j["window_too_small"] = rep.window_too_small;
        j["failures"] = rep.failures;
        j["pass"] = rep.pass();
        out << j.dump(2) << "\n";
    } else {
        out << rep.ring << ", m=" << rep.m << ", window=" << rep.window << "\n";
        out << "  monomials checked: " << rep.monomials_checked << ", members: " << rep.members
            << ", expressed: " << rep.expressed << "\n";
        out << "  synthesized members checked: " << rep.synth_checked << "\n";
        for (auto& w : rep.window_too_small) out << "  window too small for: " << w << "\n";
        for (auto& f : rep.failures) out << "  FAILURE: " << f << "\n";
        out << (rep.pass() ? "pass" : "FAIL") << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
    if (!pair_exists(cfg.pair)) throw CLI::ValidationError("--pair", "unknown pair " + cfg.pair);
    PairSpec pair = find_pair(cfg.pair);
    int m = parse_multiplicities(cfg.m_text).at(0);
    int D = cfg.truncate;
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;

    auto vr = validate_pair(pair);
    checks.push_back({"pair invariants", vr.ok(), vr.ok() ? "" : vr.violations.front()});

    QuasiSpec spec = flag_spec(pair, m);
    FreeBasis basis = qm_basis(spec);
    long long expected_rank = 1;
    for (int d : pair.degrees) expected_rank *= d;
    checks.push_back({"rank = |W|", basis.rank() == expected_rank,
                      "rank " + std::to_string(basis.rank())});

    bool members = true;
    std::string member_detail;
    for (auto& b : basis.elements) {
        auto r = is_member(b, spec);
        if (!r.member) {
            members = false;
            member_detail = b.str() + ": " + r.detail;
            break;
        }
    }
    checks.push_back({"basis membership", members, member_detail});

    HilbertSeries closed = closed_form_flag(pair, m);
    HilbertSeries from_b = from_basis(basis);
    checks.push_back({"closed form = basis series", closed.equals(from_b), ""});

    bool oracle_ok = true;
    std::string oracle_detail;
    auto coh = closed.expand_coh(D);
    for (int d = 0; d <= D; d += 2) {
        long got = oracle_dimension(spec, d, D);
        if (Integer(got) != coh[d]) {
            oracle_ok = false;
            oracle_detail = "coh degree " + std::to_string(d) + ": oracle " +
                            std::to_string(got) + " vs series " + coh[d].get_str();
            break;
        }
    }
    checks.push_back({"series = oracle (degreewise)", oracle_ok, oracle_detail});

    auto fr = filtration_check(pair, std::max(1, m), std::min(D, 16));
    checks.push_back({"filtration", fr.ok(), fr.ok() ? "" : fr.failures.front()});

    bool all = true;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["pair"] = pair.name;
        j["m"] = m;
        j["checks"] = ordered_json::array();
        for (auto& c : checks) {
            all &= c.pass;
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        j["pass"] = all;
        out << j.dump(2) << "\n";
    } else {
        out << "verify " << pair.name << " m=" << m << " D=" << D << "\n";
        for (auto& c : checks) {
            all &= c.pass;
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        out << (all ? "pass" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_bcom(const JobConfig& cfg, std::ostream& out) {
    JobConfig local = cfg;
    local.variant = "bcom";
    QuasiSpec spec = build_spec(local);
    if (local.want_basis) return cmd_basis(local, out);
    HilbertSeries series = closed_form_bcom(*spec.family, spec.bcom_n, spec.m);
    emit_dimension_table(local, spec.label() + "  " + series.str(),
                         series.expand_coh(local.truncate), out);
    return 0;
}

int cmd_filtered(const JobConfig& cfg, std::ostream& out) {
    JobConfig local = cfg;
    local.variant = "filtered";
    QuasiSpec spec = build_spec(local);
    if (local.want_basis) return cmd_basis(local, out);
    HilbertSeries series = from_basis(qm_basis(spec));
    emit_dimension_table(local, spec.label() + "  " + series.str(),
                         series.expand_coh(local.truncate), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quasinv: relative quasi-invariant algebras, exactly"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--pair", cfg.pair, "catalog pair, e.g. u:2, sp:2, spin7-g2");
        sub->add_option("--spec", cfg.spec_file, "filtered chain spec (JSON file)");
        sub->add_option("--config", cfg.config_file, "job config (JSON file)");
        sub->add_option("--m", cfg.m_text, "multiplicity, or comma list for filtered");
        sub->add_option("--variant", cfg.variant, "flag | t-equiv | bcom | filtered");
        sub->add_option("--family", cfg.family, "bcom family: u | su | sp");
        sub->add_option("--n", cfg.n, "bcom rank");
        sub->add_option("--truncate", cfg.truncate, "cohomological truncation (<= 64)");
        sub->add_option("--window", cfg.window, "K-theory exponent window");
        sub->add_option("--format", cfg.format, "text | json | csv");
        sub->add_option("--poly", cfg.poly, "polynomial for membership queries");
        sub->add_flag("--basis", cfg.want_basis, "print the free-module basis");
        sub->add_flag("--hilbert", cfg.want_hilbert, "print the Hilbert expansion");
    };

    std::vector<std::pair<std::string, int (*)(const JobConfig&, std::ostream&)>> table = {
        {"catalog", cmd_catalog},   {"basis", cmd_basis},     {"hilbert", cmd_hilbert},
        {"member", cmd_member},     {"ktheory", cmd_ktheory}, {"verify", cmd_verify},
        {"bcom", cmd_bcom},         {"filtered", cmd_filtered},
    };
    for (auto& [name, fn] : table) add_common(app.add_subcommand(name));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        apply_config_file(cfg);
        check_common(cfg);
        for (auto& [name, fn] : table)
            if (app.get_subcommand(name)->parsed()) return fn(cfg, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qi::cli
