#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "moebius/acceptance.hpp"
#include "moebius/errors.hpp"
#include "moebius/euler.hpp"
#include "moebius/lattice.hpp"
#include "moebius/parallel.hpp"
#include "moebius/printed_tables.hpp"
#include "moebius/volume.hpp"
#include "moebius/weber.hpp"

using json = nlohmann::json;
using namespace mg;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Common {
    int threads = 0;
    uint64_t seed = 20260809;
    std::string cache_dir;
    std::string format = "json";
    int budget = 4;
    bool force = false;

    std::string cache_file() const {
        std::string dir = cache_dir;
        if (dir.empty()) {
            const char* env = std::getenv("MOEBIUS_CACHE_DIR");
            dir = env ? env : ".";
        }
        return dir + "/counts.jsonl";
    }
    EnumerateOptions enum_opts() const {
        EnumerateOptions o;
        o.budget = budget;
        o.force = force;
        o.threads = threads;
        return o;
    }
    json envelope(const json& config) const {
        json j;
        j["version"] = kVersion;
        j["seed"] = seed;
        j["config"] = config;
        return j;
    }
};

std::vector<std::string> coeff_strings(const BPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(rat_str(c));
    if (out.empty()) out.push_back("0");
    return out;
}

void print_doc(const Common& c, const json& doc) {
    if (c.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // CSV: flat tables only; callers store rows under "rows" with "header"
    if (doc.contains("header")) {
        const auto& header = doc.at("header");
        for (size_t i = 0; i < header.size(); ++i)
            std::cout << (i ? "," : "") << header[i].get<std::string>();
        std::cout << "\n";
        for (const auto& row : doc.at("rows")) {
            for (size_t i = 0; i < row.size(); ++i) {
                std::string cell = row[i].is_string() ? row[i].get<std::string>() : row[i].dump();
                bool quote = cell.find(',') != std::string::npos ||
                             cell.find('"') != std::string::npos;
                if (quote) {
                    std::string esc;
                    for (char ch : cell) {
                        if (ch == '"') esc += '"';
                        esc += ch;
                    }
                    cell = '"' + esc + '"';
                }
                std::cout << (i ? "," : "") << cell;
            }
            std::cout << "\n";
        }
        return;
    }
    std::cout << doc.dump(2) << "\n";
}

json qp_to_json(const QuasiPoly& qp) {
    const Arrangement& arr = arrangement(qp.n);
    json out;
    out["twoG"] = qp.two_g;
    out["n"] = qp.n;
    out["degree"] = qp.degree;
    json chambers = json::array();
    for (size_t c = 0; c < arr.chambers.size(); ++c) {
        json ch;
        ch["signs"] = arr.chambers[c].signs;
        ch["witness"] = arr.chambers[c].witness;
        chambers.push_back(ch);
    }
    out["chambers"] = chambers;
    json classes = json::object();
    for (int mask = 0; mask < (1 << qp.n); ++mask) {
        json per_chamber = json::array();
        for (size_t c = 0; c < arr.chambers.size(); ++c) {
            json terms = json::object();
            for (const auto& [e, coef] : qp.polys[mask][c].terms) {
                std::string key;
                for (size_t i = 0; i < e.size(); ++i)
                    key += (i ? "," : "") + std::to_string(e[i]);
                terms[key] = coeff_strings(coef);
            }
            per_chamber.push_back(terms);
        }
        classes[std::to_string(mask)] = per_chamber;
    }
    out["parityClasses"] = classes;
    return out;
}

int fail(int code, const std::string& reason) {
    std::cerr << "error: " << reason << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on the moduli space of metric Moebius graphs"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "worker count (0 = all cores)");
    app.add_option("--seed", common.seed, "deterministic seed recorded in outputs");
    app.add_option("--cache-dir", common.cache_dir, "count table directory (or MOEBIUS_CACHE_DIR)");
    app.add_option("--format", common.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--budget", common.budget, "largest 2g-2+n enumerated without --force-budget");
    app.add_flag("--force-budget", common.force, "allow enumeration beyond the budget");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list all Moebius graphs of a type");
    int two_g = 0, n = 0;
    cmd_enum->add_option("two-g", two_g, "doubled genus")->required();
    cmd_enum->add_option("n", n, "number of boundaries")->required();

    // mon
    auto* cmd_mon = app.add_subcommand("mon", "measure of non-orientability of a graph");
    std::string graph_path, metric_arg;
    cmd_mon->add_option("graph", graph_path, "path to a graph JSON file")->required();
    cmd_mon->add_option("--metric", metric_arg, "comma-separated edge lengths (p/q allowed)")
        ->required();

    // count
    auto* cmd_count = app.add_subcommand("count", "refined lattice point count");
    std::vector<long> lengths;
    std::string method = "rec";
    cmd_count->add_option("two-g", two_g, "doubled genus")->required();
    cmd_count->add_option("n", n, "number of boundaries")->required();
    cmd_count->add_option("L", lengths, "boundary lengths")->required();
    cmd_count->add_option("--method", method, "direct, rec or sym")
        ->check(CLI::IsMember({"direct", "rec", "sym"}));

    // table
    auto* cmd_table = app.add_subcommand("table", "piecewise quasipolynomial of the count");
    cmd_table->add_option("two-g", two_g, "doubled genus")->required();
    cmd_table->add_option("n", n, "number of boundaries")->required();

    // volume
    auto* cmd_vol = app.add_subcommand("volume", "refined volume (value or polynomial)");
    std::vector<std::string> vol_point;
    cmd_vol->add_option("two-g", two_g, "doubled genus")->required();
    cmd_vol->add_option("n", n, "number of boundaries")->required();
    cmd_vol->add_option("L", vol_point, "evaluation point (rationals; omit for the polynomial)");

    // euler
    auto* cmd_euler = app.add_subcommand("euler", "refined Euler characteristic table");
    int max_two_g = 5, max_n = 4;
    cmd_euler->add_option("--max-two-g", max_two_g, "largest doubled genus row");
    cmd_euler->add_option("--max-n", max_n, "largest boundary column");

    auto* cmd_weber = app.add_subcommand("weber-check", "verify the base correlator encodings");
    auto* cmd_verify = app.add_subcommand("verify", "run the full acceptance suite");

    auto* cmd_cache = app.add_subcommand("cache", "count table administration");
    std::string cache_action;
    cmd_cache->add_option("action", cache_action, "list, verify or purge")
        ->required()
        ->check(CLI::IsMember({"list", "verify", "purge"}));

    CLI11_PARSE(app, argc, argv);
    if (common.threads > 0) worker_count() = common.threads;

    try {
        if (*cmd_enum) {
            GraphInventory inv = enumerate_graphs(two_g, n, common.enum_opts());
            json doc = common.envelope({{"command", "enumerate"}, {"twoG", two_g}, {"n", n}});
            json entries = json::array();
            for (const auto& e : inv.entries) {
                json ent;
                ent["graph"] = json::parse(graph_to_json(e.graph));
                ent["aut"] = e.aut_order;
                ent["edges"] = e.num_edges;
                ent["orientable"] = e.orientable;
                entries.push_back(ent);
            }
            doc["count"] = inv.entries.size();
            doc["graphs"] = entries;
            print_doc(common, doc);
            return 0;
        }
        if (*cmd_mon) {
            std::ifstream in(graph_path);
            if (!in) return fail(1, "cannot read graph file " + graph_path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            MoebiusGraph g = graph_from_json(text);
            Metric m;
            std::stringstream ss(metric_arg);
            std::string item;
            while (std::getline(ss, item, ',')) m.lengths.push_back(parse_rat(item));
            MonCache cache;
            BPoly rho = mon(g, m, &cache);
            json doc = common.envelope({{"command", "mon"}, {"graph", graph_path},
                                        {"metric", metric_arg}});
            doc["mon"] = coeff_strings(rho);
            print_doc(common, doc);
            return 0;
        }
        if (*cmd_count) {
            if (static_cast<int>(lengths.size()) != n)
                return fail(1, "expected " + std::to_string(n) + " boundary lengths");
            CountTable table(common.cache_file());
            BPoly value;
            if (method == "direct") {
                MonCache cache;
                value = count_direct(two_g, n, lengths, &cache, common.enum_opts());
            } else if (method == "sym") {
                value = count_recursive_symmetric(two_g, n, lengths, &table);
            } else {
                value = count_recursive(two_g, n, lengths, &table);
            }
            json doc = common.envelope({{"command", "count"}, {"twoG", two_g}, {"n", n},
                                        {"L", lengths}, {"method", method}});
            doc["N"] = coeff_strings(value);
            print_doc(common, doc);
            return 0;
        }
        if (*cmd_table) {
            CountTable table(common.cache_file());
            ReconstructOptions ro;
            ro.seed = common.seed;
            ro.budget = common.force ? 100 : 2;
            json doc = common.envelope({{"command", "table"}, {"twoG", two_g}, {"n", n}});
            doc["quasipolynomial"] = qp_to_json(reconstruct(two_g, n, &table, ro));
            print_doc(common, doc);
            return 0;
        }
        if (*cmd_vol) {
            CountTable table(common.cache_file());
            json doc = common.envelope({{"command", "volume"}, {"twoG", two_g}, {"n", n}});
            if (!vol_point.empty()) {
                if (static_cast<int>(vol_point.size()) != n)
                    return fail(1, "expected " + std::to_string(n) + " coordinates");
                std::vector<Rat> L;
                for (const auto& s : vol_point) L.push_back(parse_rat(s));
                if (two_g - 2 + n == 1) {
                    doc["V"] = coeff_strings(volume_base(two_g, n, L));
                } else {
                    VolumePoly v = volume_from_counts(two_g, n, &table);
                    doc["V"] = coeff_strings(volume_eval(v, L));
                }
            } else {
                VolumePoly v = volume_from_counts(two_g, n, &table);
                const Arrangement& arr = arrangement(n);
                json chambers = json::array();
                for (size_t c = 0; c < arr.chambers.size(); ++c) {
                    json ch;
                    ch["signs"] = arr.chambers[c].signs;
                    json terms = json::object();
                    for (const auto& [e, coef] : v.per_chamber[c].terms) {
                        std::string key;
                        for (size_t i = 0; i < e.size(); ++i)
                            key += (i ? "," : "") + std::to_string(e[i]);
                        terms[key] = coeff_strings(coef);
                    }
                    ch["poly"] = terms;
                    chambers.push_back(ch);
                }
                doc["volume"] = chambers;
            }
            print_doc(common, doc);
            return 0;
        }
        if (*cmd_euler) {
            json doc = common.envelope({{"command", "euler"}, {"maxTwoG", max_two_g},
                                        {"maxN", max_n}});
            json header = json::array();
            header.push_back("two_g");
            for (int col = 0; col <= max_n; ++col) header.push_back("n=" + std::to_string(col));
            json rows = json::array();
            for (int tg = 0; tg <= max_two_g; ++tg) {
                json row = json::array();
                row.push_back(std::to_string(tg));
                for (int col = 0; col <= max_n; ++col) {
                    if (tg - 2 + col < 1) {
                        row.push_back("");
                        continue;
                    }
                    BPoly chi = chi_closed_form(tg, col);
                    std::string cell;
                    for (const auto& c : coeff_strings(chi)) cell += (cell.empty() ? "" : "|") + c;
                    row.push_back(cell);
                }
                rows.push_back(row);
            }
            doc["header"] = header;
            doc["rows"] = rows;
            print_doc(common, doc);
            return 0;
        }
        if (*cmd_weber) {
            bool ok = true;
            json results = json::object();
            for (auto [tg, nn] : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {2, 1}}) {
                TruncatedSeries s = weber_base_series(tg, nn, 17);
                auto counts = extract_counts(s, tg, nn);
                bool match = true;
                std::function<void(LVec&, long)> sweep = [&](LVec& cur, long left) {
                    if (static_cast<int>(cur.size()) == nn) {
                        auto it = counts.find(cur);
                        BPoly got = it == counts.end() ? BPoly() : it->second;
                        if (got != base_case(tg, nn, cur)) match = false;
                        return;
                    }
                    long slots = nn - static_cast<long>(cur.size());
                    for (long v = 1; v + (slots - 1) <= left; ++v) {
                        cur.push_back(v);
                        sweep(cur, left - v);
                        cur.pop_back();
                    }
                };
                LVec cur;
                sweep(cur, 16);
                bool airy = airy_laplace_check(tg, nn);
                std::string key = std::to_string(tg) + "," + std::to_string(nn);
                results[key] = {{"latticeEncoding", match}, {"airyLaplace", airy}};
                ok = ok && match && airy;
            }
            json doc = common.envelope({{"command", "weber-check"}});
            doc["results"] = results;
            doc["pass"] = ok;
            print_doc(common, doc);
            return ok ? 0 : 3;
        }
        if (*cmd_verify) {
            AcceptanceOptions opts;
            opts.threads = common.threads;
            opts.seed = common.seed;
            AcceptanceReport rep = run_acceptance(opts, std::cout);
            return rep.ok() ? 0 : 3;
        }
        if (*cmd_cache) {
            CountTable table(common.cache_file());
            json doc = common.envelope({{"command", "cache"}, {"action", cache_action}});
            if (cache_action == "list") {
                doc["entries"] = table.list();
                doc["size"] = table.size();
            } else if (cache_action == "verify") {
                auto rep = table.verify(common.seed);
                doc["checked"] = rep.checked;
                doc["total"] = rep.total;
                doc["mismatches"] = rep.mismatches;
                doc["corruptLines"] = rep.corrupt_lines;
                if (!rep.mismatches.empty() || !rep.corrupt_lines.empty()) {
                    print_doc(common, doc);
                    return fail(3, "cache verification found damaged or stale records");
                }
            } else {
                table.purge();
                doc["purged"] = true;
            }
            print_doc(common, doc);
            return 0;
        }
    } catch (const PreconditionError& e) {
        return fail(1, e.what());
    } catch (const BudgetError& e) {
        return fail(2, e.what());
    } catch (const CrossCheckError& e) {
        return fail(3, e.what());
    } catch (const std::exception& e) {
        return fail(1, e.what());
    }
    return 0;
}
