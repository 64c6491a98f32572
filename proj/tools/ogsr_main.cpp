// Command-line front end. Four commands share a common flag set:
//
//   ogsr axioms   --ring R [--seminorm F]            axiom suites
//   ogsr invert   --ring R --x E [...]               series inversion
//   ogsr topology --ring R --op OP [...]             interval-topology queries
//   ogsr suite    [--id SCENARIO]                    scripted corpus
//
// A JSON config (--config) supplies defaults for any flag not given on
// the command line. Exit codes: 0 success / convergent, 1 hypothesis or
// axiom failure, 2 malformed config or query, 3 budget exhausted or
// completeness evidence failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogsr/axioms.hpp"
#include "ogsr/balls.hpp"
#include "ogsr/inversion.hpp"
#include "ogsr/registry.hpp"
#include "ogsr/scenarios.hpp"
#include "ogsr/seminorm.hpp"
#include "ogsr/topology.hpp"

namespace {

using namespace ogsr;

struct Options {
    std::string ring;
    std::string seminorm;
    std::string x_text;
    std::string y_text;
    std::string witness;
    std::string direction = "right";
    std::string op;
    std::string open_text;
    std::string id;
    std::string report_path;
    std::string config_path;
    std::size_t budget = 64;
    std::uint64_t seed = 0;
    unsigned family_depth = 16;
    unsigned window_depth = 8;
};

void attach_common(CLI::App* sub, Options& opt) {
    sub->add_option("--ring", opt.ring, "instance spec, e.g. rationals or padic:5,4");
    sub->add_option("--seminorm", opt.seminorm, "seminorm name: abs, ord2, padic, const-term");
    sub->add_option("--x", opt.x_text, "element literal in the instance grammar");
    sub->add_option("--y", opt.y_text, "second element literal where the operation needs one");
    sub->add_option("--witness", opt.witness, "order witness c; searched when omitted");
    sub->add_option("--direction", opt.direction, "right, left or both");
    sub->add_option("--op", opt.op,
                    "topology operation: contains, translate, negate, sup-limit, separation, "
                    "split, product");
    sub->add_option("--open", opt.open_text, "basic open literal open{ below: [..], above: [..] }");
    sub->add_option("--id", opt.id, "single scenario id for the suite command");
    sub->add_option("--budget", opt.budget, "iteration budget (default 64)");
    sub->add_option("--seed", opt.seed, "sampler seed (default 0)");
    sub->add_option("--family-depth", opt.family_depth,
                    "comparison family holds 2^-k for k up to this depth (default 16)");
    sub->add_option("--window-depth", opt.window_depth,
                    "dyadic windows go down to 2^-j for j up to this depth (default 8)");
    sub->add_option("--report", opt.report_path, "also write the report to this path");
    sub->add_option("--config", opt.config_path, "JSON file supplying defaults for absent flags");
}

// Config values fill only the flags the user did not pass, so command
// lines override the file.
void merge_config(const CLI::App* sub, Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw InvalidSpec("cannot open config file " + opt.config_path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object()) throw InvalidSpec("config must be a JSON object");

    auto fill_string = [&](const char* flag, const char* key, std::string& slot) {
        if (sub->count(flag) == 0 && j.contains(key)) slot = j.at(key).get<std::string>();
    };
    fill_string("--ring", "ring", opt.ring);
    fill_string("--seminorm", "seminorm", opt.seminorm);
    fill_string("--x", "x", opt.x_text);
    fill_string("--y", "y", opt.y_text);
    fill_string("--witness", "witness", opt.witness);
    fill_string("--direction", "direction", opt.direction);
    fill_string("--op", "op", opt.op);
    fill_string("--open", "open", opt.open_text);
    fill_string("--id", "id", opt.id);
    fill_string("--report", "report", opt.report_path);
    if (sub->count("--budget") == 0 && j.contains("budget"))
        opt.budget = j.at("budget").get<std::size_t>();
    if (sub->count("--seed") == 0 && j.contains("seed"))
        opt.seed = j.at("seed").get<std::uint64_t>();
    if (sub->count("--family-depth") == 0 && j.contains("family-depth"))
        opt.family_depth = j.at("family-depth").get<unsigned>();
    if (sub->count("--window-depth") == 0 && j.contains("window-depth"))
        opt.window_depth = j.at("window-depth").get<unsigned>();
}

void require(bool cond, const std::string& message) {
    if (!cond) throw InvalidSpec(message);
}

Element halve(const Element& e) {
    auto p = e.ring()->divide_by_int_payload(e.payload(), Int(2));
    if (!p)
        throw InvalidSpec("instance " + e.ring()->name() + " is not divisible by integers; "
                          "this operation needs dyadic elements");
    return e.ring()->make(*p);
}

// 1, 1/2, ..., 2^-depth when the instance divides exactly; just the unit
// otherwise (integers still certify exact termination with it).
std::vector<Element> default_family(const RingPtr& ring, unsigned depth) {
    std::vector<Element> family{ring->one()};
    for (unsigned k = 0; k < depth; ++k) {
        auto half = ring->divide_by_int_payload(family.back().payload(), Int(2));
        if (!half) break;
        family.push_back(ring->make(*half));
    }
    return family;
}

int exit_for(InversionStatus status) {
    switch (status) {
    case InversionStatus::ExactInverse:
    case InversionStatus::ConvergentEvidence: return 0;
    case InversionStatus::HypothesisFailed: return 1;
    case InversionStatus::BudgetExhausted: return 3;
    }
    return 2;
}

int cmd_axioms(const Options& opt, std::string& out) {
    require(!opt.ring.empty(), "axioms needs --ring");
    const RingPtr ring = make_instance(opt.ring);
    const AxiomReport ring_report = check_ring_axioms(ring, 1000, opt.seed);
    out += ring_report.to_report();
    const OrderReport order_report = check_order_compatibility(ring, 1000, opt.seed);
    out += order_report.to_report();
    bool ok = ring_report.all_passed() && order_report.all_passed();
    if (!opt.seminorm.empty()) {
        const SeminormReport norm_report =
            check_seminorm_axioms(make_seminorm(opt.seminorm, ring), 1000, opt.seed);
        out += norm_report.to_report();
        ok = ok && norm_report.all_passed();
    }
    return ok ? 0 : 1;
}

int cmd_invert(const Options& opt, std::string& out) {
    require(!opt.ring.empty() && !opt.x_text.empty(), "invert needs --ring and --x");
    const RingPtr ring = make_instance(opt.ring);
    const Element x = ring->parse(opt.x_text);

    if (!opt.seminorm.empty()) {
        const Seminorm f = make_seminorm(opt.seminorm, ring);
        const InversionCertificate cert =
            invert_seminormed(x, f, dyadic_windows(f.target(), opt.window_depth), opt.budget);
        out += cert.to_report();
        return exit_for(cert.status);
    }

    std::optional<Element> c;
    std::string provenance = "user-supplied";
    if (!opt.witness.empty()) {
        c = ring->parse(opt.witness);
    } else if (compare(x, ring->zero()) == Comparison::Greater) {
        const WitnessSearch search = archimedean_witness_search(x, Int(1) << 20);
        out += search.to_report();
        if (search.status != WitnessSearchStatus::Found) {
            out += "status: HypothesisFailed\n";
            return 1;
        }
        c = search.witness;
        provenance = "witness-search";
    } else {
        // Nonpositive x cannot have a witness; let the certificate name
        // the failed hypothesis instead of erroring out here.
        c = ring->one();
        provenance = "placeholder (x is not positive)";
    }

    const std::vector<Element> family = default_family(ring, opt.family_depth);
    InversionCertificate cert = [&] {
        if (opt.direction == "right")
            return invert_ordered(x, *c, PowerDirection::RightNested, opt.budget, family,
                                  provenance);
        if (opt.direction == "left")
            return invert_ordered(x, *c, PowerDirection::LeftNested, opt.budget, family,
                                  provenance);
        require(opt.direction == "both", "direction must be right, left or both");
        return invert_two_sided(x, *c, *c, opt.budget, family);
    }();
    out += cert.to_report();
    return exit_for(cert.status);
}

int cmd_topology(const Options& opt, std::string& out) {
    require(!opt.ring.empty(), "topology needs --ring");
    require(!opt.op.empty(), "topology needs --op");
    const RingPtr ring = make_instance(opt.ring);

    auto parsed_open = [&] {
        require(!opt.open_text.empty(), "op " + opt.op + " needs --open");
        return parse_open(ring, opt.open_text);
    };
    auto parsed_x = [&] {
        require(!opt.x_text.empty(), "op " + opt.op + " needs --x");
        return ring->parse(opt.x_text);
    };
    auto parsed_y = [&] {
        require(!opt.y_text.empty(), "op " + opt.op + " needs --y");
        return ring->parse(opt.y_text);
    };
    // Increasing dyadic approach x - 2^-n to a point, the stock chain for
    // limit and separation queries.
    auto chain_to = [&](const Element& point) {
        std::vector<Element> chain;
        Element delta = ring->one();
        for (unsigned n = 0; n <= opt.family_depth; ++n) {
            chain.push_back(point - delta);
            delta = halve(delta);
        }
        return chain;
    };

    if (opt.op == "contains") {
        const BasicOpen v = parsed_open();
        const Element x = parsed_x();
        out += "open: " + v.str() + "\n";
        out += "element: " + x.str() + "\n";
        out += std::string("contains: ") + (v.contains(x) ? "true" : "false") + "\n";
        return 0;
    }
    if (opt.op == "translate") {
        out += "translated: " + parsed_open().translated(parsed_x()).str() + "\n";
        return 0;
    }
    if (opt.op == "negate") {
        out += "negated: " + parsed_open().negated().str() + "\n";
        return 0;
    }
    if (opt.op == "sup-limit") {
        const Element sup = parsed_x();
        std::vector<BasicOpen> opens;
        if (!opt.open_text.empty()) {
            opens.push_back(parse_open(ring, opt.open_text));
        } else {
            Element radius = ring->one();
            for (unsigned j = 0; j <= opt.window_depth; ++j) {
                opens.push_back(BasicOpen::interval(sup - radius, sup + radius));
                radius = halve(radius);
            }
        }
        out += sup_limit_check(chain_to(sup), sup, opens).to_report();
        return 0;
    }
    if (opt.op == "separation") {
        const Element limit = parsed_x();
        out += separation_witness(limit, parsed_y(), chain_to(limit)).to_report();
        return 0;
    }
    if (opt.op == "split") {
        out += split_neighborhood(parsed_open(), parsed_x(), parsed_y()).to_report();
        return 0;
    }
    if (opt.op == "product") {
        out += product_continuity_witness(parsed_open(), parsed_x(), parsed_y()).to_report();
        return 0;
    }
    throw InvalidSpec("unknown topology op '" + opt.op +
                      "'; known: contains, translate, negate, sup-limit, separation, split, "
                      "product");
}

int cmd_suite(const Options& opt, std::string& out) {
    const std::vector<std::string> ids =
        opt.id.empty() ? scenario_ids() : std::vector<std::string>{opt.id};
    std::size_t met = 0;
    for (const std::string& id : ids) {
        const ScenarioResult result = run_scenario(id);
        out += result.report;
        out += std::string("met: ") + (result.met() ? "true" : "false") + "\n\n";
        if (result.met()) ++met;
    }
    out += "suite: " + std::to_string(ids.size()) + " scenarios, " + std::to_string(met) +
           " met\n";
    return met == ids.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact series inversion in ordered and seminormed nonassociative rings"};
    app.require_subcommand(1);
    Options opt;
    CLI::App* axioms = app.add_subcommand("axioms", "ring, order and seminorm axiom suites");
    CLI::App* invert = app.add_subcommand("invert", "oriented geometric series inversion");
    CLI::App* topology = app.add_subcommand("topology", "interval-topology queries");
    CLI::App* suite = app.add_subcommand("suite", "run the scripted scenario corpus");
    for (CLI::App* sub : {axioms, invert, topology, suite}) attach_common(sub, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }

    std::string out;
    int code = 0;
    try {
        CLI::App* sub = app.get_subcommands().front();
        merge_config(sub, opt);
        if (sub == axioms) code = cmd_axioms(opt, out);
        else if (sub == invert) code = cmd_invert(opt, out);
        else if (sub == topology) code = cmd_topology(opt, out);
        else code = cmd_suite(opt, out);
    } catch (const NotCauchy& e) {
        out += std::string("error: ") + e.what() + "\n";
        code = 3;
    } catch (const InvariantViolation& e) {
        out += std::string("error: ") + e.what() + "\n";
        code = 1;
    } catch (const nlohmann::json::exception& e) {
        out += std::string("error: ") + e.what() + "\n";
        code = 2;
    } catch (const std::exception& e) {
        out += std::string("error: ") + e.what() + "\n";
        code = 2;
    }

    std::cout << out;
    if (!opt.report_path.empty()) {
        std::ofstream file(opt.report_path);
        if (!file) {
            std::cout << "error: cannot write report to " << opt.report_path << "\n";
            return 2;
        }
        file << out;
    }
    return code;
}
