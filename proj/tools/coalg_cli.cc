/*
 * Copyright 2026 The coalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// coalg: command-line front end for the bisimulation, Barr-equivalence,
// chain, equation-solving and gallery engines.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coalg/acceptance.hh"
#include "coalg/barr.hh"
#include "coalg/bisim.hh"
#include "coalg/chains.hh"
#include "coalg/citm.hh"
#include "coalg/error.hh"
#include "coalg/gallery.hh"
#include "coalg/signatures.hh"
#include "coalg/transition.hh"

namespace {

constexpr int kOk = 0;
constexpr int kDistinct = 1;
constexpr int kInputError = 2;

struct Bounds {
    std::size_t depth = 16;
    std::uint64_t family_bound = 8;
    std::size_t count = 200;
    std::size_t max_states = 6;
    std::uint64_t seed = 42;
};

/// Input errors carry the file they came from.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError(path + ": cannot open");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename F>
auto parse_file(const std::string& path, F&& parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const coalg::Error& e) {
        throw FileError(path + ": " + e.what());
    }
}

coalg::TransitionSystem load_system(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return coalg::parse_transition_system(t); });
}

coalg::StateId root_or_first(const coalg::TransitionSystem& ts, const std::string& path) {
    if (ts.root()) {
        return *ts.root();
    }
    if (ts.size() == 0) {
        throw FileError(path + ": system has no states");
    }
    return 0;
}

int cmd_bisim(const std::vector<std::string>& files, const std::vector<std::string>& pair) {
    if (files.size() == 2) {
        const auto a = load_system(files[0]);
        const auto b = load_system(files[1]);
        const auto both = coalg::disjoint_union(a, b);
        const auto p = coalg::bisimilarity(both);
        const auto ra = root_or_first(a, files[0]);
        const auto rb = static_cast<coalg::StateId>(a.size()) + root_or_first(b, files[1]);
        const bool same = p.same_block(ra, rb);
        std::cout << (same ? "bisimilar" : "not bisimilar") << "\n";
        return same ? kOk : kDistinct;
    }
    const auto ts = load_system(files.at(0));
    const auto p = coalg::bisimilarity(ts);
    if (pair.empty()) {
        std::cout << coalg::to_string(ts, p);
        return kOk;
    }
    const bool same = p.same_block(ts.id(pair[0]), ts.id(pair[1]));
    std::cout << (same ? "bisimilar" : "not bisimilar") << "\n";
    return same ? kOk : kDistinct;
}

int cmd_minimize(const std::string& file, const std::string& root) {
    const auto ts = load_system(file);
    const auto r = root.empty() ? root_or_first(ts, file) : ts.id(root);
    const auto m = coalg::minimize(ts, r);
    std::cout << coalg::to_string(m.system);
    return kOk;
}

int cmd_barr(const std::string& file, const std::vector<std::string>& pair, std::size_t bound,
             bool harness, std::size_t exhaustive, const Bounds& b) {
    if (harness || exhaustive > 0) {
        const auto report = harness ? coalg::barr_vs_bisim_harness(b.seed, b.count, b.max_states)
                                    : coalg::barr_vs_bisim_exhaustive(exhaustive);
        std::cout << report.text();
        return report.disagreements() == 0 ? kOk : kDistinct;
    }
    if (file.empty() || pair.size() != 2) {
        throw coalg::InvalidArgument("barr needs a system file and --pair, or --harness/--exhaustive");
    }
    const auto ts = load_system(file);
    const auto x = ts.id(pair[0]);
    const auto y = ts.id(pair[1]);
    const std::size_t n = bound > 0 ? bound : std::max<std::size_t>(1, coalg::complete_bound(ts, x, y));
    const auto v = coalg::barr_equiv(ts, x, y, n);
    if (v.distinguished()) {
        std::cout << "distinguished at level " << *v.witness_level << "\n";
        return kDistinct;
    }
    std::cout << "equivalent up to level " << n << "\n";
    return kOk;
}

int cmd_stratified(const std::string& left, const std::string& right, std::size_t level,
                   const Bounds& b) {
    const auto t = coalg::gallery::parse_tree(left);
    const auto s = coalg::gallery::parse_tree(right);
    const auto v = coalg::gallery::stratified_check(t, s, level, b.depth, b.family_bound);
    if (v.equivalent) {
        std::cout << "equivalent (depth " << b.depth << ", family bound " << b.family_bound << ")\n";
        return kOk;
    }
    std::cout << "distinguished: " << v.witness->to_string() << "\n";
    return kDistinct;
}

int cmd_solve(const std::string& file, const std::string& sig_file, std::size_t depth) {
    const auto sys = [&] {
        if (sig_file.empty()) {
            return parse_file(file, [](const std::string& t) { return coalg::parse_equations(t); });
        }
        const auto sig = parse_file(sig_file, [](const std::string& t) { return coalg::parse_signature(t); });
        return parse_file(file, [&](const std::string& t) { return coalg::parse_equations(sig, t); });
    }();
    const auto sol = coalg::solve(sys);
    for (const auto& [x, tree] : sol) {
        std::cout << "[" << x << "]\n" << coalg::to_string(tree);
    }
    const bool ok = coalg::verify_solution(sys, sol, depth);
    std::cout << "verified to depth " << depth << ": " << (ok ? "yes" : "no") << "\n";
    return ok ? kOk : kDistinct;
}

int cmd_chain(const std::string& kind, std::size_t n, const std::string& sig_file) {
    std::vector<std::size_t> sizes;
    if (kind == "initial") {
        for (const auto& s : coalg::initial_chain_powerset(n)) {
            sizes.push_back(s.carrier.size());
        }
    } else if (kind == "terminal") {
        for (const auto& s : coalg::terminal_chain_powerset(n)) {
            sizes.push_back(s.carrier.size());
        }
    } else {
        if (sig_file.empty()) {
            throw coalg::InvalidArgument("--kind polynomial needs --sig");
        }
        const auto sig = parse_file(sig_file, [](const std::string& t) { return coalg::parse_signature(t); });
        sizes = coalg::initial_chain_polynomial(sig, n).sizes();
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::cout << "stage " << i << ": " << sizes[i] << "\n";
    }
    return kOk;
}

int cmd_gallery(std::size_t i_max, const Bounds& b) {
    const auto report = coalg::gallery::reproduce_counterexamples(i_max, b.depth, b.family_bound);
    std::cout << report.text();
    return report.all_pass() ? kOk : kDistinct;
}

int cmd_selftest(const Bounds& b, bool corrupt, bool timing) {
    coalg::AcceptanceOptions opts;
    opts.seed = b.seed;
    opts.depth = b.depth;
    opts.family_bound = b.family_bound;
    opts.count = b.count;
    opts.max_states = b.max_states;
    opts.corrupt_chain_table = corrupt;
    const auto report = coalg::run_acceptance(opts);
    std::cout << report.text(timing);
    return report.all_pass() ? kOk : kDistinct;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coalgebraic bisimulation, Barr equivalence and stratified equivalence tools"};
    app.require_subcommand(1);

    Bounds b;
    auto add_bounds = [&b](CLI::App* sub) {
        sub->add_option("--depth", b.depth, "cut depth bound")->check(CLI::Range(1, 256));
        sub->add_option("--family-bound", b.family_bound, "family instantiation bound")
            ->check(CLI::Range(1, 64));
        sub->add_option("--count", b.count, "number of random instances")->check(CLI::Range(1, 100000));
        sub->add_option("--max-states", b.max_states, "largest random system")->check(CLI::Range(1, 10));
        sub->add_option("--seed", b.seed, "random seed");
    };

    std::vector<std::string> files;
    std::vector<std::string> pair;
    std::string root;
    std::string file;
    std::string sig_file;
    std::string left;
    std::string right;
    std::string kind = "initial";
    std::size_t bound = 0;
    std::size_t level = 0;
    std::size_t exhaustive = 0;
    std::size_t chain_n = 4;
    std::size_t i_max = 4;
    bool harness = false;
    bool corrupt = false;
    bool timing = false;

    auto* bisim = app.add_subcommand("bisim", "bisimilarity of two rooted systems, or the partition of one");
    bisim->add_option("files", files, "one or two system files")->required()->expected(1, 2);
    bisim->add_option("--pair", pair, "compare two states of a single system")->expected(2);

    auto* minimize = app.add_subcommand("minimize", "quotient by bisimilarity");
    minimize->add_option("file", file)->required();
    minimize->add_option("--root", root, "root state (default: the file's root)");

    auto* barr = app.add_subcommand("barr", "Barr equivalence by extensional cuts");
    barr->add_option("file", file);
    barr->add_option("--pair", pair)->expected(2);
    barr->add_option("--bound", bound, "cut levels to compare (default: complete bound)");
    barr->add_flag("--harness", harness, "compare Barr equivalence with bisimilarity on random systems");
    barr->add_option("--exhaustive", exhaustive, "compare on every system up to this size")
        ->check(CLI::Range(1, 4));
    add_bounds(barr);

    auto* strat = app.add_subcommand("stratified", "bounded ≈_i on gallery trees, e.g. T(0) S(0)");
    strat->add_option("left", left)->required();
    strat->add_option("right", right)->required();
    strat->add_option("--level", level)->required();
    add_bounds(strat);

    auto* solve = app.add_subcommand("solve", "solve a guarded flat equation system");
    solve->add_option("file", file)->required();
    solve->add_option("--sig", sig_file, "signature file (default: inferred)");
    add_bounds(solve);

    auto* chain = app.add_subcommand("chain", "initial and terminal chain sizes");
    chain->add_option("--kind", kind)->check(CLI::IsMember({"initial", "terminal", "polynomial"}));
    chain->add_option("--n", chain_n, "last stage")->check(CLI::Range(0, 64));
    chain->add_option("--sig", sig_file, "signature file for --kind polynomial");

    auto* gallery = app.add_subcommand("gallery", "reproduce the separating examples");
    gallery->add_option("--i-max", i_max)->check(CLI::Range(0, 4));
    add_bounds(gallery);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    add_bounds(selftest);
    selftest->add_flag("--timing", timing, "print per-criterion runtimes");
    selftest->add_flag("--corrupt-chain-table", corrupt)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*bisim) {
            return cmd_bisim(files, pair);
        }
        if (*minimize) {
            return cmd_minimize(file, root);
        }
        if (*barr) {
            return cmd_barr(file, pair, bound, harness, exhaustive, b);
        }
        if (*strat) {
            return cmd_stratified(left, right, level, b);
        }
        if (*solve) {
            return cmd_solve(file, sig_file, b.depth);
        }
        if (*chain) {
            return cmd_chain(kind, chain_n, sig_file);
        }
        if (*gallery) {
            return cmd_gallery(i_max, b);
        }
        if (*selftest) {
            return cmd_selftest(b, corrupt, timing);
        }
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const coalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
