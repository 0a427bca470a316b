#include "sset/cli.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sset/axioms.hpp"
#include "sset/io.hpp"
#include "sset/standard.hpp"

namespace sset {

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int verdict_exit(Verdict v)
{
    switch (v) {
        case Verdict::holds: return kExitHolds;
        case Verdict::fails: return kExitFails;
        default: return kExitInconclusive;
    }
}

struct CommonOpts {
    int dim = 2;
    int stages = 2;
    std::uint64_t budget = 50'000'000;
    std::uint64_t seed = 7;
    std::string report_path;
    std::string format = "text";
    std::string workdir;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts)
{
    cmd->add_option("--dim", opts.dim, "degree bound for quantified checks");
    cmd->add_option("--stages", opts.stages, "number of small-object stages");
    cmd->add_option("--budget", opts.budget, "search budget in candidate placements");
    cmd->add_option("--seed", opts.seed, "deterministic seed");
    cmd->add_option("--report", opts.report_path, "write a JSON report here");
    cmd->add_option("--format", opts.format, "stdout format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--workdir", opts.workdir, "directory of .sset/.smap inputs");
    cmd->add_option("--out", opts.out, "directory for produced artifacts");
}

int load_env(const CommonOpts& opts, Environment& env)
{
    if (opts.workdir.empty()) return kExitHolds;
    Diagnostic d = load_directory(opts.workdir, env);
    if (!d.ok()) {
        std::cerr << "workdir: " << d.str() << "\n";
        return kExitParse;
    }
    return kExitHolds;
}

int emit_report(const CommonOpts& opts, const Report& rep)
{
    if (opts.format == "json") std::cout << rep.to_json(false);
    else {
        for (const CheckResult& c : rep.checks) {
            std::cout << c.id << ": " << to_string(c.verdict);
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            if (!c.witness.empty()) std::cout << " witness: " << c.witness;
            std::cout << "\n";
        }
        std::cout << "overall: " << to_string(rep.overall()) << "\n";
    }
    if (!opts.report_path.empty()) {
        Diagnostic d = write_file(opts.report_path, rep.to_json(true));
        if (!d.ok()) {
            std::cerr << d.str() << "\n";
            return kExitParse;
        }
    }
    return verdict_exit(rep.overall());
}

int ensure_out(const std::string& out)
{
    if (out.empty()) return kExitHolds;
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) {
        std::cerr << "cannot create " << out << "\n";
        return kExitParse;
    }
    return kExitHolds;
}

Parsed<Presentation> load_sset_file(const std::string& path)
{
    auto bytes = read_file(path);
    if (!bytes.ok()) return {std::nullopt, bytes.diag};
    return parse_sset(*bytes.value);
}

Parsed<SimplicialMap> load_smap_file(const std::string& path, const Environment& env)
{
    auto bytes = read_file(path);
    if (!bytes.ok()) return {std::nullopt, bytes.diag};
    return parse_smap(*bytes.value, env);
}

void write_square(const std::string& dir, const LiftingSquare& sq)
{
    auto dump = [&](const Presentation& p, const std::string& nm) {
        Presentation copy = p;
        copy.rename(nm);
        write_file(dir + "/" + nm + ".sset", serialize_sset(copy));
    };
    dump(sq.i.source(), "A");
    dump(sq.i.target(), "B");
    dump(sq.p.source(), "X");
    dump(sq.p.target(), "Y");
    auto dumpm = [&](const SimplicialMap& m, const std::string& nm, const std::string& s,
                     const std::string& t) {
        SimplicialMap copy = m;
        copy.rename(nm);
        std::string text = serialize_smap(copy);
        // rewrite endpoint names to the dumped objects
        std::size_t colon = text.find(':');
        text = "smap " + nm + " : " + s + " -> " + t + text.substr(text.find('\n'));
        write_file(dir + "/" + nm + ".smap", text);
        (void)colon;
    };
    dumpm(sq.i, "i", "A", "B");
    dumpm(sq.p, "p", "X", "Y");
    dumpm(sq.top, "top", "A", "X");
    dumpm(sq.bottom, "bottom", "B", "Y");
}

int cmd_check(const CommonOpts& opts, const std::vector<std::string>& files)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    bool any_bad = false;
    for (const std::string& path : files) {
        std::string ext = std::filesystem::path(path).extension().string();
        Diagnostic diag;
        if (ext == ".sset") {
            auto p = load_sset_file(path);
            diag = p.diag;
            if (p.ok()) env.ssets[p.value->name()] = std::move(*p.value);
        } else if (ext == ".smap") {
            auto m = load_smap_file(path, env);
            diag = m.diag;
            if (m.ok()) env.smaps[m.value->name()] = std::move(*m.value);
        } else if (ext == ".trace") {
            auto bytes = read_file(path);
            diag = bytes.ok() ? parse_trace(*bytes.value, env).diag : bytes.diag;
        } else {
            diag = {Diagnostic::Kind::io, 0, 0, "unknown extension: " + path};
        }
        std::cout << path << ": " << (diag.ok() ? "ok" : diag.str()) << "\n";
        if (!diag.ok()) any_bad = true;
    }
    return any_bad ? kExitParse : kExitHolds;
}

int cmd_kan(const CommonOpts& opts, const std::string& file)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    auto p = load_sset_file(file);
    if (!p.ok()) {
        std::cerr << file << ": " << p.diag.str() << "\n";
        return kExitParse;
    }
    Checked<LiftingSquare> res = is_kan_complex_up_to(*p.value, opts.dim, Budget(opts.budget));
    Report rep;
    rep.suite = "kan";
    rep.tool_version = "0.1.0";
    rep.inputs["object"] = fnv1a_hex(serialize_sset(*p.value));
    CheckResult c;
    c.id = "kan_up_to";
    c.bound = opts.dim;
    c.verdict = res.verdict;
    if (res.fails()) {
        c.witness = "unsolvable horn square over " + res.witness->i.source().name();
        if (!opts.out.empty()) {
            if (int rc = ensure_out(opts.out)) return rc;
            write_square(opts.out, *res.witness);
            c.witness += " (written to " + opts.out + ")";
        }
    }
    rep.checks.push_back(std::move(c));
    return emit_report(opts, rep);
}

int cmd_lift(const CommonOpts& opts, const std::string& fi, const std::string& fp,
             const std::string& ftop, const std::string& fbottom)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    LiftingSquare sq;
    auto grab = [&](const std::string& path, SimplicialMap& dst) {
        auto m = load_smap_file(path, env);
        if (!m.ok()) {
            std::cerr << path << ": " << m.diag.str() << "\n";
            return false;
        }
        dst = std::move(*m.value);
        return true;
    };
    if (!grab(fi, sq.i) || !grab(fp, sq.p) || !grab(ftop, sq.top) || !grab(fbottom, sq.bottom))
        return kExitParse;
    if (!square_commutes(sq)) {
        std::cerr << "square does not commute\n";
        return kExitParse;
    }
    LiftResult lr = solve_lift(sq, Budget(opts.budget));
    Report rep;
    rep.suite = "lift";
    rep.tool_version = "0.1.0";
    CheckResult c;
    c.id = "lift";
    c.verdict = lr.outcome == LiftOutcome::found
                    ? Verdict::holds
                    : (lr.outcome == LiftOutcome::none ? Verdict::fails
                                                       : Verdict::inconclusive);
    c.detail = "explored " + std::to_string(lr.explored) + " placements";
    rep.checks.push_back(c);
    if (lr.outcome == LiftOutcome::found && !opts.out.empty()) {
        if (int rc = ensure_out(opts.out)) return rc;
        SimplicialMap diag = *lr.lift;
        diag.rename("diagonal");
        write_file(opts.out + "/diagonal.smap", serialize_smap(diag));
    }
    return emit_report(opts, rep);
}

int cmd_factor(const CommonOpts& opts, const std::string& file, const std::string& via)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    auto m = load_smap_file(file, env);
    if (!m.ok()) {
        std::cerr << file << ": " << m.diag.str() << "\n";
        return kExitParse;
    }
    MapFamily fam = via == "horns" ? MapFamily::horns(opts.dim)
                                   : MapFamily::boundaries(opts.dim);
    Factorization f = factorize(*m.value, fam, opts.stages, opts.dim, Budget(opts.budget));
    if (!opts.out.empty()) {
        if (int rc = ensure_out(opts.out)) return rc;
        for (std::size_t s = 0; s < f.stages.size(); ++s) {
            Presentation obj = f.stages[s].object;
            obj.rename("stage" + std::to_string(s + 1));
            write_file(opts.out + "/stage" + std::to_string(s + 1) + ".sset",
                       serialize_sset(obj));
        }
        SimplicialMap left = f.left, right = f.right;
        write_file(opts.out + "/left.smap", serialize_smap(left));
        write_file(opts.out + "/right.smap", serialize_smap(right));
        if (f.trace.has_value())
            write_file(opts.out + "/left.trace", serialize_trace(*f.trace));
    }
    Report rep;
    rep.suite = "factor";
    rep.tool_version = "0.1.0";
    rep.inputs["map"] = fnv1a_hex(serialize_smap(*m.value));
    CheckResult c;
    c.id = "right_leg_rlp";
    c.bound = opts.dim;
    c.verdict = f.rlp_report.verdict;
    c.detail = "N=" + std::to_string(opts.stages) + " d=" + std::to_string(opts.dim);
    rep.checks.push_back(std::move(c));
    if (via == "boundaries") {
        CheckResult c2;
        c2.id = "left_leg_injective";
        c2.verdict = f.left_injectivity.verdict;
        rep.checks.push_back(std::move(c2));
    }
    if (!opts.out.empty()) write_file(opts.out + "/report.json", rep.to_json(true));
    return emit_report(opts, rep);
}

int cmd_minimalize(const CommonOpts& opts, const std::string& file, int waive)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    auto m = load_smap_file(file, env);
    if (!m.ok()) {
        std::cerr << file << ": " << m.diag.str() << "\n";
        return kExitParse;
    }
    TruncationWaiver waiver;
    if (waive >= 0) waiver = {true, waive};
    MinimalizationResult mr;
    try {
        mr = minimal_subfibration(*m.value, opts.dim, Budget(opts.budget), waiver);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    Report rep;
    rep.suite = "minimalize";
    rep.tool_version = "0.1.0";
    CheckResult c;
    c.id = "minimal_subfibration";
    c.bound = opts.dim;
    c.verdict = mr.status == MinimalizeStatus::ok ? Verdict::holds : Verdict::inconclusive;
    c.detail = mr.diagnostic;
    if (waiver.declared)
        c.detail += (c.detail.empty() ? "" : "; ") + std::string("truncation waiver at ") +
                    std::to_string(waiver.truncated_at);
    rep.checks.push_back(std::move(c));
    if (mr.status == MinimalizeStatus::ok && !opts.out.empty()) {
        if (int rc = ensure_out(opts.out)) return rc;
        write_file(opts.out + "/E.sset", serialize_sset(mr.E));
        write_file(opts.out + "/inclusion.smap", serialize_smap(mr.inclusion));
        write_file(opts.out + "/retraction.smap", serialize_smap(mr.retraction));
        write_file(opts.out + "/homotopy.smap", serialize_smap(mr.homotopy));
        nlohmann::ordered_json man;
        man["status"] = "ok";
        man["waiver"] = mr.waiver.declared;
        man["generators"] = mr.E.gen_count();
        write_file(opts.out + "/manifest.json", man.dump(2) + "\n");
    }
    return emit_report(opts, rep);
}

int cmd_bundle(const CommonOpts& opts, const std::string& file, int extend)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    auto m = load_smap_file(file, env);
    if (!m.ok()) {
        std::cerr << file << ": " << m.diag.str() << "\n";
        return kExitParse;
    }
    BundleAtlas atlas = is_f_bundle(*m.value, opts.dim, Budget(opts.budget));
    Report rep;
    rep.suite = "bundle";
    rep.tool_version = "0.1.0";
    CheckResult c;
    c.id = "is_f_bundle";
    c.bound = opts.dim;
    c.verdict = atlas.is_bundle ? Verdict::holds
                                : (atlas.inconclusive ? Verdict::inconclusive : Verdict::fails);
    c.detail = atlas.is_bundle
                   ? "fiber " + std::to_string(atlas.fiber.gen_count()) + " generators, " +
                         std::to_string(atlas.charts.size()) + " charts"
                   : atlas.diagnostic;
    rep.checks.push_back(std::move(c));
    if (atlas.is_bundle && !opts.out.empty()) {
        if (int rc = ensure_out(opts.out)) return rc;
        Presentation fib = atlas.fiber;
        write_file(opts.out + "/F.sset", serialize_sset(fib));
        nlohmann::ordered_json man;
        man["fiber"] = fib.gen_count();
        man["charts"] = nlohmann::ordered_json::array();
        for (std::size_t t = 0; t < atlas.charts.size(); ++t) {
            const Trivialization& ch = atlas.charts[t];
            std::string nm = "chart" + std::to_string(t);
            SimplicialMap iso = ch.iso;
            iso.rename(nm);
            write_file(opts.out + "/" + nm + ".smap", serialize_smap(iso));
            nlohmann::ordered_json e;
            e["over"] = m.value->target().repr(ch.over);
            e["file"] = nm + ".smap";
            man["charts"].push_back(std::move(e));
        }
        write_file(opts.out + "/atlas.json", man.dump(2) + "\n");
    }
    if (atlas.is_bundle && extend >= 0) {
        BundleExtension ext =
            extend_bundle_staged(*m.value, extend, opts.dim, Budget(opts.budget));
        CheckResult c2;
        c2.id = "extend_bundle_staged";
        c2.bound = opts.dim;
        c2.verdict = ext.status == MinimalizeStatus::ok
                         ? ext.cartesian.verdict
                         : Verdict::inconclusive;
        c2.detail = ext.status == MinimalizeStatus::ok
                        ? "total space " + std::to_string(ext.extended.source().gen_count()) +
                              " generators"
                        : ext.diagnostic;
        rep.checks.push_back(std::move(c2));
        if (ext.status == MinimalizeStatus::ok && !opts.out.empty()) {
            if (int rc = ensure_out(opts.out)) return rc;
            Presentation tot = ext.extended.source();
            tot.rename("E_ext");
            write_file(opts.out + "/E_ext.sset", serialize_sset(tot));
            write_file(opts.out + "/pi_ext.smap", serialize_smap(ext.extended));
            if (ext.total_trace.has_value())
                write_file(opts.out + "/iota.trace", serialize_trace(*ext.total_trace));
        }
    }
    return emit_report(opts, rep);
}

int cmd_homset(const CommonOpts& opts, const std::string& fx, const std::string& fz)
{
    Environment env;
    if (int rc = load_env(opts, env)) return rc;
    auto px = load_sset_file(fx);
    auto pz = load_sset_file(fz);
    if (!px.ok() || !pz.ok()) {
        std::cerr << (px.ok() ? fz + ": " + pz.diag.str() : fx + ": " + px.diag.str()) << "\n";
        return kExitParse;
    }
    HomotopyClassTable table = homotopy_set(*px.value, *pz.value, Budget(opts.budget));
    Report rep;
    rep.suite = "homset";
    rep.tool_version = "0.1.0";
    CheckResult c;
    c.id = "homotopy_set";
    c.verdict = table.complete ? Verdict::holds : Verdict::inconclusive;
    c.detail = std::to_string(table.maps.size()) + " maps, " +
               std::to_string(table.class_count()) + " classes";
    rep.checks.push_back(std::move(c));
    if (!opts.out.empty()) {
        if (int rc = ensure_out(opts.out)) return rc;
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["source"] = px.value->name();
        j["target"] = pz.value->name();
        j["complete"] = table.complete;
        j["classes"] = nlohmann::ordered_json::array();
        for (int cls = 0; cls < table.class_count(); ++cls) {
            nlohmann::ordered_json e;
            e["class"] = cls;
            e["representative"] =
                table.maps[static_cast<std::size_t>(
                               table.representatives[static_cast<std::size_t>(cls)])]
                    .name();
            int size = 0;
            for (int cm : table.class_of)
                if (cm == cls) ++size;
            e["size"] = size;
            j["classes"].push_back(std::move(e));
        }
        write_file(opts.out + "/classes.json", j.dump(2) + "\n");
        // witnesses serialize as .smap files on the product presentation
        for (std::size_t e = 0; e < table.edges.size(); ++e) {
            SimplicialMap h = table.edges[e].h;
            h.rename("witness" + std::to_string(e));
            write_file(opts.out + "/witness" + std::to_string(e) + ".smap",
                       serialize_smap(h));
        }
    }
    return emit_report(opts, rep);
}

int cmd_verify_axioms(const CommonOpts& opts)
{
    CorpusLimits limits;
    limits.max_dim = opts.dim;
    Corpus corpus = generate_corpus(opts.seed, limits, Budget(opts.budget));
    McConfig cfg;
    cfg.dim = opts.dim;
    cfg.stages = opts.stages;
    cfg.seed = opts.seed;
    cfg.budget = Budget(opts.budget);
    Report rep = verify_mc_suite(corpus, cfg);
    return emit_report(opts, rep);
}

int cmd_corpus(const CommonOpts& opts, int max_size)
{
    CorpusLimits limits;
    limits.max_dim = opts.dim;
    limits.max_nondegenerate = max_size;
    Corpus corpus = generate_corpus(opts.seed, limits, Budget(opts.budget));
    std::cout << "objects " << corpus.objects.size() << " maps " << corpus.maps.size()
              << " fibrations " << corpus.fibrations.size() << " traces "
              << corpus.traces.size() << "\n";
    std::cout << "digest " << corpus.digest() << "\n";
    if (!opts.out.empty()) {
        if (int rc = ensure_out(opts.out)) return rc;
        for (const Presentation& p : corpus.objects)
            write_file(opts.out + "/" + p.name() + ".sset", serialize_sset(p));
        for (const SimplicialMap& m : corpus.maps)
            write_file(opts.out + "/" + m.name() + ".smap", serialize_smap(m));
        for (const AnodyneTrace& tr : corpus.traces) {
            // intermediate stage objects first, so attaching maps resolve
            TraceReplay replay = replay_anodyne(tr);
            if (!replay.accepted) continue;
            std::vector<std::string> stage_names{tr.start.name()};
            for (std::size_t s = 0; s < replay.stage_objects.size(); ++s) {
                Presentation obj = replay.stage_objects[s];
                std::string nm = tr.name + "_obj" + std::to_string(s + 1);
                obj.rename(nm);
                write_file(opts.out + "/" + nm + ".sset", serialize_sset(obj));
                stage_names.push_back(nm);
            }
            int idx = 0;
            std::size_t stage_no = 0;
            AnodyneTrace named = tr;
            for (TraceStage& st : named.stages) {
                for (HornCell& cell : st.cells) {
                    Presentation tgt = cell.attach.target();
                    tgt.rename(stage_names[stage_no]);
                    std::string nm = tr.name + "_att" + std::to_string(idx++);
                    SimplicialMap att(nm, cell.attach.source(), std::move(tgt),
                                      cell.attach.images());
                    write_file(opts.out + "/" + nm + ".smap", serialize_smap(att));
                    cell.attach = std::move(att);
                }
                if (!st.cells.empty()) ++stage_no;
            }
            write_file(opts.out + "/" + tr.name + ".trace", serialize_trace(named));
        }
    }
    return kExitHolds;
}

}  // namespace

int cli_run(const std::vector<std::string>& args)
{
    CLI::App app{"finite simplicial set computation engine"};
    app.require_subcommand(1);
    CommonOpts opts;

    auto* check = app.add_subcommand("check", "parse and validate inputs");
    std::vector<std::string> check_files;
    check->add_option("files", check_files, "input files")->required();
    add_common(check, opts);

    auto* lift = app.add_subcommand("lift", "solve a lifting square");
    std::string fi, fp, ftop, fbottom;
    lift->add_option("--i", fi, "left leg .smap")->required();
    lift->add_option("--p", fp, "right leg .smap")->required();
    lift->add_option("--top", ftop, "top .smap")->required();
    lift->add_option("--bottom", fbottom, "bottom .smap")->required();
    add_common(lift, opts);

    auto* kan = app.add_subcommand("kan", "Kan complex check up to --dim");
    std::string kan_file;
    kan->add_option("file", kan_file, ".sset input")->required();
    add_common(kan, opts);

    auto* factor = app.add_subcommand("factor", "staged small-object factorization");
    std::string factor_file, via = "horns";
    factor->add_option("file", factor_file, ".smap input")->required();
    factor->add_option("--via", via, "generating family: horns|boundaries")
        ->check(CLI::IsMember({"horns", "boundaries"}));
    add_common(factor, opts);

    auto* minimalize = app.add_subcommand("minimalize", "minimal subfibration extraction");
    std::string min_file;
    int waive = -1;
    minimalize->add_option("file", min_file, ".smap input")->required();
    minimalize->add_option("--waive-truncation", waive,
                           "declare the source truncated at this degree");
    add_common(minimalize, opts);

    auto* bundle = app.add_subcommand("bundle", "F-bundle detection and staged extension");
    std::string bundle_file;
    int extend = -1;
    bundle->add_option("file", bundle_file, ".smap input")->required();
    bundle->add_option("--extend", extend, "extend over this many fibrant stages");
    add_common(bundle, opts);

    auto* homset = app.add_subcommand("homset", "homotopy classes of maps");
    std::string hx, hz;
    homset->add_option("source", hx, "source .sset")->required();
    homset->add_option("target", hz, "target .sset")->required();
    add_common(homset, opts);

    auto* axioms = app.add_subcommand("verify-axioms", "MC1-MC5 instance suite");
    add_common(axioms, opts);

    auto* corpus = app.add_subcommand("corpus", "generate the deterministic corpus");
    int max_size = 50;
    corpus->add_option("--size", max_size, "max nondegenerate simplices per object");
    add_common(corpus, opts);

    std::vector<const char*> argv;
    argv.push_back("sset");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            std::cout << app.help();
            return kExitHolds;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(opts, check_files);
        if (lift->parsed()) return cmd_lift(opts, fi, fp, ftop, fbottom);
        if (kan->parsed()) return cmd_kan(opts, kan_file);
        if (factor->parsed()) return cmd_factor(opts, factor_file, via);
        if (minimalize->parsed()) return cmd_minimalize(opts, min_file, waive);
        if (bundle->parsed()) return cmd_bundle(opts, bundle_file, extend);
        if (homset->parsed()) return cmd_homset(opts, hx, hz);
        if (axioms->parsed()) return cmd_verify_axioms(opts);
        if (corpus->parsed()) return cmd_corpus(opts, max_size);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}

int cli_main(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args);
}
}  // namespace sset
