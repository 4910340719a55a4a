#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qz/suite.hpp"

namespace {

using namespace qz;

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file: " + path);
    out << text;
}

OrderId parse_order(const std::string& name, int m)
{
    if (name == "ramified")
        return OrderId{OrderKind::Ramified, m};
    if (name == "split")
        return OrderId{OrderKind::Split, m};
    if (name == "inert")
        return OrderId{OrderKind::Inert, m};
    throw ConfigError("order must be ramified, split or inert");
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty())
                parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (c != ' ' && c != '(' && c != ')') {
            cur += c;
        }
    }
    return Partition(parts);
}

// plain key=value configuration file; explicitly passed CLI flags win
void apply_config_file(const std::string& path, SuiteConfig& cfg,
                       const std::function<bool(const std::string&)>& flag_was_set)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            while (!s.empty() && isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (flag_was_set("--" + key))
            continue;
        if (key == "suite")
            cfg.suite = val;
        else if (key == "m")
            cfg.m_max = std::stoi(val);
        else if (key == "n")
            cfg.n_max = std::stoi(val);
        else if (key == "Q")
            cfg.Q = std::stoi(val);
        else if (key == "seed")
            cfg.seed = std::stoull(val);
        else if (key == "points")
            cfg.points_per_identity = std::stoi(val);
        else if (key == "out")
            cfg.output_path = val;
        else if (key == "format")
            cfg.format = val;
        else
            throw ConfigError("unknown config key: " + key);
    }
}

int summarize(const std::vector<CheckReport>& reports, const SuiteConfig& cfg)
{
    int fails = 0;
    double total_ms = 0;
    for (const auto& r : reports) {
        total_ms += r.elapsed_ms;
        if (!r.passed())
            ++fails;
    }
    std::string text = cfg.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports);
    write_output(cfg.output_path, text);
    std::cerr << reports.size() << " checks, " << fails << " failed"
              << " (" << static_cast<long>(total_ms) << " ms)\n";
    for (const auto& r : reports)
        if (!r.passed())
            std::cerr << "FAIL " << r.id << " [" << r.params << "] " << r.note << "\n";
    return fails == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verification of q-series identities and lattice zeta functions"};
    app.require_subcommand(1);
    app.fallthrough(); // parent options may follow a subcommand

    SuiteConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file (flags override)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--Q", cfg.Q, "series truncation order (default 30)");
        sub->add_option("--seed", cfg.seed, "sampler seed (default 20260808)");
        sub->add_option("--points", cfg.points_per_identity, "rational points per identity");
        sub->add_option("--out", cfg.output_path, "output file (stdout when omitted)");
        sub->add_option("--format", cfg.format, "json or csv");
    };

    // check
    auto* check = app.add_subcommand("check", "run an identity suite");
    check->add_option("--suite", cfg.suite, "classical | rrsums | zeta | oracle | sieve | all");
    std::string single_id;
    check->add_option("--id", single_id, "run a single registry entry");
    check->add_option("--m", cfg.m_max, "fold-parameter cap");
    check->add_option("--n", cfg.n_max, "size cap");
    bool list_only = false;
    check->add_flag("--list", list_only, "list registry entries and exit");
    add_common(check);

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "emit zeta coefficient tables");
    std::string order_name = "inert", what = "coh";
    int zm = 1, zn = 2, tmax = -1;
    zeta_cmd->add_option("--order", order_name, "ramified | split | inert");
    zeta_cmd->add_option("--m", zm, "order parameter m");
    zeta_cmd->add_option("--n", zn, "rank n");
    zeta_cmd->add_option("--what", what, "coh | nu | nu-tilde");
    zeta_cmd->add_option("--tmax", tmax, "largest t-degree (default m*n + 2)");
    add_common(zeta_cmd);

    // hall
    auto* hall_cmd = app.add_subcommand("hall", "print a Hall polynomial");
    std::string la_text, mu_text;
    hall_cmd->add_option("--lambda", la_text, "outer partition, e.g. 2,1")->required();
    hall_cmd->add_option("--mu", mu_text, "inner partition (empty for the zero submodule)");
    add_common(hall_cmd);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "emit brute-force count tables");
    int oq = 2, om = 1, on = 1;
    bool oracle_verify = false;
    oracle_cmd->add_option("--q", oq, "field size (2 or 3)");
    oracle_cmd->add_option("--m", om, "nilpotency m");
    oracle_cmd->add_option("--n", on, "rank n");
    oracle_cmd->add_flag("--verify", oracle_verify, "run the census suite instead of emitting tables");
    add_common(oracle_cmd);

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "evaluate the master polynomial at roots of unity");
    int sm = 1, sn = 2, sr = 2;
    sieve_cmd->add_option("--m", sm, "fold parameter");
    sieve_cmd->add_option("--n", sn, "size");
    sieve_cmd->add_option("--r", sr, "root order, must divide n");
    add_common(sieve_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
            apply_config_file(config_path, cfg, [active](const std::string& flag) {
                const CLI::Option* opt = active->get_option_no_throw(flag);
                return opt != nullptr && opt->count() > 0;
            });
        }

        if (check->parsed()) {
            if (list_only) {
                for (const auto& e : identity_registry()) {
                    std::cout << e.id << "  [" << e.regime << "]  " << e.reference << "  (suites:";
                    for (const auto& s : e.suites)
                        std::cout << " " << s;
                    std::cout << ")\n";
                }
                return 0;
            }
            std::vector<CheckReport> reports =
                single_id.empty() ? run_suite(cfg) : check_identity(single_id, cfg);
            return summarize(reports, cfg);
        }
        if (zeta_cmd->parsed()) {
            OrderId order = parse_order(order_name, zm);
            if (tmax < 0)
                tmax = zm * zn + 2;
            ZetaValue v = zeta_table(what, order, zn, tmax);
            write_output(cfg.output_path,
                         cfg.format == "csv" ? zeta_value_to_csv(v) : zeta_value_to_json(v));
            return 0;
        }
        if (hall_cmd->parsed()) {
            Partition la = parse_partition(la_text);
            Partition mu = mu_text.empty() ? Partition() : parse_partition(mu_text);
            LaurentPoly g = hall_g(la, mu);
            std::cout << "g^" << la.str() << "_" << mu.str() << " = " << g.str() << "\n";
            return 0;
        }
        if (oracle_cmd->parsed()) {
            if (oracle_verify) {
                cfg.suite = "oracle";
                return summarize(run_suite(cfg), cfg);
            }
            const SmallField& F = build_field(oq, 1);
            FqModule amb = inert_ambient(F, om, on);
            std::map<Var, Rational> at_q{{Var::q, Rational(oq)}};
            std::ostringstream os;
            os << "q,m,n,lambda,mu,tr_grassmannian,ctr_grassmannian,hall,B,pr1_fiber,pr2_fiber\n";
            for (const auto& la : partitions_in_rectangle(om, on)) {
                long tr = count_tr_grassmannian(amb, la);
                long ctr = count_ctr_grassmannian(amb, la);
                for (const auto& mu : partitions_in_rectangle(om, on)) {
                    if (!la.contains(mu))
                        continue;
                    Rational hall = hall_g(la, mu).eval(at_q);
                    Rational b = B_count(om, on, la, mu).eval(at_q);
                    auto pr1 = tr_flag_fibers(amb, la, mu, FlagSide::Pr1);
                    auto pr2 = tr_flag_fibers(amb, la, mu, FlagSide::Pr2);
                    long f1 = pr1.empty() ? -1 : pr1.begin()->second;
                    long f2 = pr2.empty() ? -1 : pr2.begin()->second;
                    os << oq << "," << om << "," << on << "," << la.str() << "," << mu.str() << ","
                       << tr << "," << ctr << "," << hall.get_str() << "," << b.get_str() << "," << f1
                       << "," << f2 << "\n";
                }
            }
            write_output(cfg.output_path, os.str());
            return 0;
        }
        if (sieve_cmd->parsed()) {
            std::string witness;
            bool ok = sieve_closed_form_holds(sm, sn, sr, &witness);
            std::cout << (ok ? "PASS" : "FAIL") << " m=" << sm << " n=" << sn << " r=" << sr
                      << "  closed form: " << witness << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
