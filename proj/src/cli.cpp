#include "ordwb/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <vector>

#include "ordwb/collapse.hpp"
#include "ordwb/harness.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"

namespace ordwb {

namespace {

using json = nlohmann::json;

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    std::uint64_t x = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (v.empty() || ec != std::errc() || end != v.data() + v.size())
        throw Error(ErrorCode::InvalidTerm, "bad value for " + key + ": " + v);
    return x;
}

struct Cfg {
    std::string sys = "bh";
    std::optional<std::uint64_t> maxlen, fuel, seed, items;
    std::string format = "text";
    bool jsonl() const { return format == "jsonl"; }
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv, const std::optional<std::string>& env) {
        CLI::App app{"ordinal notation workbench", "ordwb"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--sys", cfg_.sys, "bh | pi3 | piN:<n> | pi11 | stab");
        app.add_option("--maxlen", cfg_.maxlen, "enumeration length bound");
        app.add_option("--fuel", cfg_.fuel, "descent step bound");
        app.add_option("--seed", cfg_.seed, "random seed");
        app.add_option("--items", cfg_.items, "enumeration size bound");
        app.add_option("--format", cfg_.format, "text | jsonl")->check(CLI::IsMember({"text", "jsonl"}));

        std::string t1, t2, rho, suite;
        std::vector<std::string> rest;
        bool inverse = false, serial = false;
        std::uint64_t trials = 1000, rhos = 20, pairs = 200;
        unsigned ladder_n = 8;

        auto* p = app.add_subcommand("parse", "print the normal form of a term");
        p->add_option("term", t1)->required();
        auto* c = app.add_subcommand("cmp", "compare two terms");
        c->add_option("a", t1)->required();
        c->add_option("b", t2)->required();
        auto* v = app.add_subcommand("validate", "check membership in the notation system");
        v->add_option("term", t1)->required();
        auto* e = app.add_subcommand("enum", "list every valid term up to --maxlen");
        auto* co = app.add_subcommand("collapse", "apply t -> t[rho/S]");
        co->add_option("--rho", rho)->required();
        co->add_flag("--inverse", inverse, "uncollapse instead");
        co->add_option("term", t1)->required();
        auto* cl = app.add_subcommand("closure", "C^alpha(X) over the bounded universe");
        cl->add_option("alpha", t1)->required();
        cl->add_option("X", rest);
        auto* ck = app.add_subcommand("check", "run a harness suite");
        ck->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
        ck->add_flag("--serial", serial, "run the serial reference kernel");
        ck->add_option("--trials", trials, "random descent trials per start");
        ck->add_option("--rhos", rhos, "collapse targets");
        ck->add_option("--pairs", pairs, "in-domain pairs per target");
        auto* la = app.add_subcommand("ladder", "print the milestone ladder");
        la->add_option("-n", ladder_n, "largest tower height");
        for (auto* s : {p, c, v, e, co, cl, ck, la})
            s->fallthrough();

        std::vector<std::string> args;
        for (int i = argc - 1; i >= 0; --i)
            args.emplace_back(argv[i]);
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& ex) {
            return usage(ex.what());
        }

        try {
            sys_ = SystemId::from_name(cfg_.sys);
        } catch (const Error& ex) {
            return usage(ex.what());
        }
        try {
            if (env)
                budget_ = parse_budget(*env);
        } catch (const Error& ex) {
            return usage(std::string("ORDWB_BUDGET: ") + ex.what());
        }
        if (cfg_.maxlen)
            budget_.maxlen = *cfg_.maxlen;
        if (cfg_.fuel)
            budget_.fuel = *cfg_.fuel;
        if (cfg_.seed)
            budget_.seed = *cfg_.seed;
        if (cfg_.items)
            budget_.max_items = *cfg_.items;

        try {
            if (p->parsed())
                return do_parse(t1);
            if (c->parsed())
                return do_cmp(t1, t2);
            if (v->parsed())
                return do_validate(t1);
            if (e->parsed())
                return do_enum();
            if (co->parsed())
                return do_collapse(rho, t1, inverse);
            if (cl->parsed())
                return do_closure(t1, rest);
            if (ck->parsed()) {
                HarnessOptions opt;
                opt.budget = budget_;
                opt.exec = serial ? Exec::Serial : Exec::Parallel;
                opt.trials = trials;
                opt.rho_count = rhos;
                opt.pairs_per_rho = pairs;
                return do_check(suite, opt);
            }
            if (la->parsed())
                return do_ladder(ladder_n);
        } catch (const SyntaxError& ex) {
            if (cfg_.jsonl())
                out_ << json{{"error", "SyntaxError"}, {"column", ex.column()}, {"message", ex.what()}}.dump() << '\n';
            err_ << "syntax error at column " << ex.column() << ": " << ex.what() << '\n';
            return 2;
        } catch (const Error& ex) {
            if (cfg_.jsonl())
                out_ << json{{"error", error_name(ex.code())}, {"message", ex.what()}}.dump() << '\n';
            err_ << "error " << error_name(ex.code()) << ": " << ex.what() << '\n';
            return 1;
        }
        return usage("no verb");
    }

private:
    int usage(const std::string& msg) {
        err_ << "usage error: " << msg << '\n';
        return 2;
    }

    OrdTerm term(const std::string& text) {
        OrdTerm t = parse(text, sys_);
        if (!constructors_legal(sys_, t))
            throw Error(ErrorCode::InvalidTerm, "constructor outside " + sys_.name() + ": " + render(t));
        return t;
    }

    json base() const { return json{{"sys", sys_.name()}}; }

    int do_parse(const std::string& text) {
        OrdTerm t = term(text);
        if (cfg_.jsonl()) {
            json j = base();
            j["term"] = render(t);
            j["length"] = length(t);
            out_ << j.dump() << '\n';
        } else {
            out_ << render(t) << '\n';
        }
        return 0;
    }

    int do_cmp(const std::string& a, const std::string& b) {
        OrdTerm x = term(a), y = term(b);
        const char* s = cmp_symbol(compare(sys_, x, y));
        if (cfg_.jsonl()) {
            json j = base();
            j["a"] = render(x);
            j["b"] = render(y);
            j["cmp"] = s;
            out_ << j.dump() << '\n';
        } else {
            out_ << s << '\n';
        }
        return 0;
    }

    int do_validate(const std::string& text) {
        OrdTerm t = term(text);
        Verdict v = validate(sys_, t);
        if (cfg_.jsonl()) {
            json j = base();
            j["term"] = render(t);
            j["valid"] = v.ok;
            json rs = json::array();
            for (auto& r : v.reason)
                rs.push_back(json{{"rule", r.rule}, {"path", r.path}});
            j["violations"] = rs;
            out_ << j.dump() << '\n';
        } else {
            out_ << (v.ok ? "valid" : "invalid") << '\n';
            for (auto& r : v.reason)
                out_ << "  " << r.rule << " at " << r.path << '\n';
        }
        return v.ok ? 0 : 1;
    }

    int do_enum() {
        for (auto& t : enumerate(sys_, budget_)) {
            if (cfg_.jsonl()) {
                json j = base();
                j["term"] = render(t);
                out_ << j.dump() << '\n';
            } else {
                out_ << render(t) << '\n';
            }
        }
        return 0;
    }

    int do_collapse(const std::string& r, const std::string& text, bool inverse) {
        OrdTerm rho = term(r), t = term(text);
        OrdTerm u = inverse ? uncollapse(sys_, t, rho) : collapse(sys_, t, rho);
        if (cfg_.jsonl()) {
            json j = base();
            j["rho"] = render(rho);
            j["term"] = render(t);
            j[inverse ? "preimage" : "image"] = render(u);
            out_ << j.dump() << '\n';
        } else {
            out_ << render(u) << '\n';
        }
        return 0;
    }

    int do_closure(const std::string& a, const std::vector<std::string>& xs) {
        OrdTerm alpha = term(a);
        std::vector<OrdTerm> X;
        for (auto& x : xs)
            X.push_back(term(x));
        for (auto& t : closure_c(alpha, X, sys_, budget_)) {
            if (cfg_.jsonl()) {
                json j = base();
                j["alpha"] = render(alpha);
                j["term"] = render(t);
                out_ << j.dump() << '\n';
            } else {
                out_ << render(t) << '\n';
            }
        }
        return 0;
    }

    int do_check(const std::string& suite, const HarnessOptions& opt) {
        Report r = run_suite(suite, sys_, opt);
        if (cfg_.jsonl()) {
            json j{{"suite", r.suite},  {"size", r.universe_size}, {"checked", r.checked},
                   {"failures", r.failure_count}, {"counterexamples", r.failures}};
            if (suite == "descent")
                j["max_chain"] = r.max_chain;
            out_ << j.dump() << '\n';
        } else {
            out_ << report_line(r) << '\n';
            for (auto& f : r.failures)
                out_ << "  " << f << '\n';
        }
        return r.passed() ? 0 : 1;
    }

    int do_ladder(unsigned n) {
        auto lad = milestone_ladder(sys_, n);
        const OrdTerm om = constant(ConstName::Omega);
        bool ok = true;
        for (std::size_t i = 0; i < lad.size(); ++i) {
            const bool valid = is_valid(sys_, lad[i]);
            const bool below = cmp(lad[i], om) < 0;
            const bool up = i == 0 || cmp(lad[i - 1], lad[i]) < 0;
            ok = ok && valid && below && up;
            if (cfg_.jsonl()) {
                json j = base();
                j["n"] = i;
                j["term"] = render(lad[i]);
                j["valid"] = valid;
                j["below_om"] = below;
                j["increasing"] = up;
                out_ << j.dump() << '\n';
            } else {
                out_ << i << "  " << render(lad[i]) << (valid && below && up ? "" : "  !") << '\n';
            }
        }
        return ok ? 0 : 1;
    }

    std::ostream& out_;
    std::ostream& err_;
    Cfg cfg_;
    SystemId sys_ = SystemId::bh();
    Budget budget_;
};

}  // namespace

Budget parse_budget(const std::string& text, Budget b) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidTerm, "expected key=value: " + item);
        const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
        if (k == "maxlen")
            b.maxlen = to_u64(k, v);
        else if (k == "fuel")
            b.fuel = to_u64(k, v);
        else if (k == "seed")
            b.seed = to_u64(k, v);
        else if (k == "items")
            b.max_items = to_u64(k, v);
        else
            throw Error(ErrorCode::InvalidTerm, "unknown budget key: " + k);
    }
    return b;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_budget) {
    Runner r(out, err);
    return r.run(argc, argv, env_budget);
}

}  // namespace ordwb
