// Command-line front end: exact L-genus solving, characteristic numbers of
// the projective-bundle families, generator certification, signature
// classification, and the conformance verification suite.

#include "pontcalc/json_format.hpp"
#include "pontcalc/l_oracle.hpp"
#include "pontcalc/parse.hpp"
#include "pontcalc/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

using namespace pontcalc;

struct GlobalOpts {
    bool json = false;
    std::string c_assignment;
    std::size_t max_basis = RingModel::kDefaultGuard;
};

int cmd_lgenus(const GlobalOpts& g, int i, const std::string& source) {
    GeneratorAssignment assign = parse_c_assignment(g.c_assignment);
    std::optional<LGenusResult> solver, oracle;
    if (source == "solver" || source == "both")
        solver = solve_l(i, assign);
    if (source == "oracle" || source == "both")
        oracle = multiplicative_sequence(q_series(i), i);

    if (g.json) {
        if (source == "both") {
            Json j = Json::array();
            j.push_back(l_genus_to_json(*solver, "solver"));
            j.push_back(l_genus_to_json(*oracle, "oracle"));
            std::cout << j.dump() << "\n";
        } else if (solver) {
            std::cout << l_genus_to_json(*solver).dump() << "\n";
        } else {
            std::cout << l_genus_to_json(*oracle, "oracle").dump() << "\n";
        }
    } else {
        if (solver)
            std::cout << l_genus_pretty(*solver) << (source == "both" ? "   [solver]\n" : "\n");
        if (oracle)
            std::cout << l_genus_pretty(*oracle) << (source == "both" ? "   [oracle]\n" : "\n");
    }

    if (source == "both") {
        bool match = *solver == *oracle;
        if (!g.json)
            std::cout << (match ? "verdict: MATCH" : "verdict: MISMATCH") << "\n";
        return match ? kExitOk : kExitMathFailure;
    }
    return kExitOk;
}

int cmd_charnum(const GlobalOpts& g, const std::string& spec, const std::string& partition) {
    ManifoldModel m = parse_manifold_spec(spec, g.max_basis);
    Partition j = parse_partition_list(partition);
    ParamPoly value = pontryagin_number(m, j);
    if (g.json) {
        Json out;
        out["manifold"] = m.name;
        out["partition"] = partition_to_json(j);
        out["value"] = value.to_string();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_svector(const GlobalOpts& g, const std::string& spec, const std::string& basis) {
    ManifoldModel m = parse_manifold_spec(spec, g.max_basis);
    CharVector v = char_vector(m, basis == "p" ? CharBasis::P : CharBasis::S);
    if (g.json) {
        std::cout << char_vector_to_json(v).dump() << "\n";
    } else {
        for (const auto& [j, value] : v.values)
            std::cout << j.to_string() << ": " << value.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_certify(const GlobalOpts& g, const std::string& spec, const std::string& set) {
    ManifoldModel m = parse_manifold_spec(spec, g.max_basis);
    auto assignment = parse_param_assignment(set);
    ParamPoly s = s_number(m, m.dim4);
    Rational value = s.specialize(assignment);
    bool generator = !value.is_zero();
    if (g.json) {
        Json out;
        out["manifold"] = m.name;
        out["n"] = m.dim4;
        out["s_number"] = value.to_string();
        out["generator"] = generator;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "s_" << m.dim4 << " = " << value.to_string() << "; generator: "
                  << (generator ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_classify(const GlobalOpts& g, const std::string& combo_text, int i) {
    Combo combo = parse_combo(combo_text, i);
    ClassifyResult r = classify_combo(combo);
    if (g.json) {
        Json out;
        out["combo"] = combo_text;
        out["i"] = i;
        if (r.is_multiple) {
            out["result"] = "multiple_of_signature";
            out["ratio"] = r.ratio.to_string();
        } else {
            out["result"] = "unbounded";
            out["witness"] = partition_to_json(r.witness);
            out["value"] = r.value.to_string();
        }
        std::cout << out.dump() << "\n";
    } else {
        if (r.is_multiple)
            std::cout << "multiple of signature, ratio " << r.ratio.to_string() << "\n";
        else
            std::cout << "unbounded; witness alpha_" << r.witness.to_string()
                      << ", value = " << r.value.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, int max_i, bool corrupt) {
    VerifyOptions opts;
    opts.max_i = max_i;
    opts.corrupt_relation = corrupt;
    auto results = run_verification(opts);

    bool all_pass = true;
    if (g.json) {
        Json out = Json::array();
        for (const CheckResult& r : results) {
            Json row;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["seconds"] = r.seconds;
            if (!r.detail.empty())
                row["detail"] = r.detail;
            out.push_back(std::move(row));
            all_pass = all_pass && r.pass;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const CheckResult& r : results) {
            all_pass = all_pass && r.pass;
            std::printf("[%s] %-32s (%.3f s)%s%s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.seconds,
                        r.detail.empty() ? "" : "  ", r.detail.c_str());
        }
        std::printf("%zu checks, %s\n", results.size(),
                    all_pass ? "all passed" : "FAILURES PRESENT");
    }
    return all_pass ? kExitOk : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pontryagin numbers of CP^{2k}-bundles over S^4 and "
                 "L-genus coefficients from cobordism bases"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--c-assignment", g.c_assignment,
                   "Bundle constants, e.g. \"2:1,3:-5\" or \"all:2\"");
    app.add_option("--max-basis", g.max_basis, "Tensor-model basis-size guard");

    auto* lgenus = app.add_subcommand("lgenus", "Solve for the L-genus coefficients L_i");
    int lgenus_i = 0;
    std::string lgenus_source = "solver";
    lgenus->add_option("i", lgenus_i, "Dimension index (real dimension 4i)")
        ->required()
        ->check(CLI::PositiveNumber);
    lgenus->add_option("--source", lgenus_source, "solver|oracle|both")
        ->check(CLI::IsMember({"solver", "oracle", "both"}));

    auto* charnum = app.add_subcommand("charnum", "One Pontryagin number of a manifold");
    std::string cn_manifold, cn_partition;
    charnum->add_option("--manifold", cn_manifold, "e.g. \"xc:k=2,c=@c\" or \"cp:m=1*xc:k=1,c=1\"")
        ->required();
    charnum->add_option("--partition", cn_partition, "e.g. \"1,1,1\"")->required();

    auto* svector = app.add_subcommand("svector", "Full characteristic-number vector");
    std::string sv_manifold, sv_basis = "s";
    svector->add_option("--manifold", sv_manifold)->required();
    svector->add_option("--basis", sv_basis, "p|s")->check(CLI::IsMember({"p", "s"}));

    auto* certify = app.add_subcommand("certify", "Thom generator certificate (s-number != 0)");
    std::string cert_manifold, cert_set;
    certify->add_option("--manifold", cert_manifold)->required();
    certify->add_option("--set", cert_set, "Parameter values, e.g. \"c=1\"");

    auto* classify = app.add_subcommand(
        "classify", "Multiple of the signature, or unbounded with witness");
    std::string cls_combo;
    int cls_i = 0;
    classify->add_option("combo", cls_combo, "e.g. \"7*p[2]-p[1]^2\"")->required();
    classify->add_option("--i", cls_i, "Dimension index")->required()->check(
        CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run the conformance suite");
    int verify_max_i = 6;
    bool verify_corrupt = false;
    verify->add_option("--max-i", verify_max_i, "Cap for solver-facing checks")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--selftest-corrupt", verify_corrupt,
                     "Negative control: corrupt a relation and expect failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (lgenus->parsed())
            return cmd_lgenus(g, lgenus_i, lgenus_source);
        if (charnum->parsed())
            return cmd_charnum(g, cn_manifold, cn_partition);
        if (svector->parsed())
            return cmd_svector(g, sv_manifold, sv_basis);
        if (certify->parsed())
            return cmd_certify(g, cert_manifold, cert_set);
        if (classify->parsed())
            return cmd_classify(g, cls_combo, cls_i);
        if (verify->parsed())
            return cmd_verify(g, verify_max_i, verify_corrupt);
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
