#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpad/bracket.hpp"
#include "knotpad/corpus.hpp"
#include "knotpad/errors.hpp"
#include "knotpad/json_io.hpp"
#include "knotpad/reduce_alt.hpp"
#include "knotpad/reduce_plat.hpp"
#include "knotpad/render.hpp"
#include "knotpad/theory.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace knotpad;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kNotAKnot = 3, kCap = 4, kVerify = 5 };

// Collected for the run manifest.
struct Run {
    std::vector<std::string> argv;
    std::string command;
    std::vector<std::string> inputs;
    std::string theory;
    json flags = json::object();
    std::vector<std::string> outputs;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file \"" + path + "\"");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(Run& run, const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << text;
    run.outputs.push_back(path);
}

// "corpus:<name>" names a bundled entry; anything else is a file path.
KnotDocument load_knot(const std::string& source) {
    const std::string prefix = "corpus:";
    if (source.rfind(prefix, 0) == 0) {
        const auto& e = corpus_entry(source.substr(prefix.size()));
        KnotDocument doc;
        doc.diagram = e.diagram;
        if (e.plat) {
            doc.kind = KnotDocument::Kind::plat;
            doc.plat = *e.plat;
        }
        return doc;
    }
    return parse_knot_document(read_file(source));
}

// Output prefix: --out if given, else the input's stem (next to a file input).
std::string output_prefix(const std::string& out, const std::string& source, const std::string& tag) {
    if (!out.empty()) return out;
    const std::string prefix = "corpus:";
    if (source.rfind(prefix, 0) == 0) return source.substr(prefix.size()) + "." + tag;
    fs::path p(source);
    std::string stem = p.filename().string();
    for (const char* ext : {".pd.json", ".plat.json", ".json"}) {
        const std::string e = ext;
        if (stem.size() > e.size() && stem.compare(stem.size() - e.size(), e.size(), e) == 0) {
            stem.resize(stem.size() - e.size());
            break;
        }
    }
    return (p.parent_path() / (stem + "." + tag)).string();
}

void verify_or_throw(const InvariantValue& expected, const InvariantValue& got, const std::string& what) {
    if (!(expected == got))
        throw VerificationFailure(what + ": expected " + expected.to_string() + ", got " + got.to_string());
}

int cmd_reduce_alt(Run& run, const std::string& source, const Theory& th, bool verify, const std::string& out) {
    const auto doc = load_knot(source);
    const auto rep = reduce_alternating(doc.diagram, th);
    const auto prefix = output_prefix(out, source, "alt");
    write_file(run, prefix + ".report.json", alt_report_json(rep, th));
    write_file(run, prefix + ".pd.json", serialize_pd(rep.output));
    std::cout << "case=" << to_string(rep.kase) << " r=" << rep.r << " T=" << rep.T
              << " crossings=" << rep.crossings_before << "->" << rep.crossings_after << "\n";
    if (verify) {
        const auto in = evaluate(th, doc.diagram);
        verify_or_throw(twist_by(th, in, rep.r), evaluate(th, rep.output), "framed invariant of the output");
        std::cout << "verify: ok (" << th.selector << ")\n";
    }
    return kOk;
}

int cmd_reduce_plat(Run& run, const std::string& source, const Theory& th, bool verify, const std::string& out) {
    const auto doc = load_knot(source);
    const auto rep =
        doc.kind == KnotDocument::Kind::plat ? reduce_plat(doc.plat, th) : reduce_plat(doc.diagram, th);
    const auto prefix = output_prefix(out, source, "platred");
    write_file(run, prefix + ".report.json", plat_report_json(rep, th));
    write_file(run, prefix + ".plat.json", serialize_plat(rep.output));
    std::cout << "m=" << rep.m << " n=" << rep.n << " d=" << rep.d << " T=" << rep.T
              << " certificates=" << (rep.certificates.all() ? "all" : "incomplete") << "\n";
    if (verify) {
        verify_or_throw(evaluate(th, doc.diagram), evaluate(th, rep.output), "invariant of the output plat");
        std::cout << "verify: ok (" << th.selector << ")\n";
    }
    return kOk;
}

int cmd_invariant(Run& run, const std::string& source, const Theory& th, const std::string& format,
                  const std::string& out) {
    const auto doc = load_knot(source);
    const auto v = doc.kind == KnotDocument::Kind::plat ? evaluate(th, doc.plat) : evaluate(th, doc.diagram);
    std::string text;
    if (format == "json") {
        json j;
        j["type"] = "invariant";
        j["theory"] = th.selector;
        j["value"] = v.to_string();
        text = j.dump() + "\n";
    } else {
        text = v.to_string() + "\n";
    }
    if (out.empty())
        std::cout << text;
    else
        write_file(run, out, text);
    return kOk;
}

int cmd_exponent(const Theory& th, const std::string& format) {
    if (format == "json") {
        json j;
        j["theory"] = th.selector;
        j["exponent"] = th.exponent;
        j["T"] = th.T;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << th.exponent << "\n";
    }
    return kOk;
}

int cmd_certify(Run& run, const std::string& source, const std::string& out) {
    const auto doc = load_knot(source);
    if (doc.kind != KnotDocument::Kind::plat) throw ParseError("certify needs a plat document");
    const auto c = certify(doc.plat);
    const auto text = certification_json(doc.plat, c);
    if (out.empty())
        std::cout << text;
    else
        write_file(run, out, text);
    return c.certificates.all() ? kOk : kVerify;
}

int cmd_render(Run& run, const std::string& source, const std::string& format, const std::string& out) {
    const auto doc = load_knot(source);
    const bool plat = doc.kind == KnotDocument::Kind::plat;
    std::string text;
    if (format == "svg")
        text = plat ? render_plat_svg(doc.plat) : render_pd_svg(doc.diagram);
    else
        text = plat ? render_plat_ascii(doc.plat) : render_pd_ascii(doc.diagram);
    if (out.empty())
        std::cout << text;
    else
        write_file(run, out, text);
    return kOk;
}

int cmd_corpus(Run& run, const std::string& out) {
    for (const auto& e : corpus()) {
        std::cout << e.name << " crossings=" << e.diagram.crossing_count() << (e.plat ? " plat" : "") << "\n";
        if (out.empty()) continue;
        fs::create_directories(out);
        if (e.plat)
            write_file(run, (fs::path(out) / (e.name + ".plat.json")).string(), serialize_plat(*e.plat));
        else
            write_file(run, (fs::path(out) / (e.name + ".pd.json")).string(), serialize_pd(e.diagram));
    }
    return kOk;
}

void write_manifest(const Run& run, const std::string& path, int status, double seconds) {
    json m;
    m["type"] = "run_manifest";
    m["command"] = run.command;
    m["argv"] = run.argv;
    m["inputs"] = run.inputs;
    m["theory"] = run.theory;
    m["flags"] = run.flags;
    m["outputs"] = run.outputs;
    m["exit_status"] = status;
    m["timing_seconds"] = seconds;
    std::ofstream(path, std::ios::binary) << m.dump(2) << "\n";
}

int run_cli(std::vector<std::string> args);

int dispatch(Run& run, CLI::App& app, const std::string& source, const std::string& selector, bool verify,
             bool allow_unconfirmed, const std::string& format, const std::string& out,
             const std::string& replay_path) {
    auto theory = [&] {
        if (selector.empty()) throw std::invalid_argument("--theory is required for " + run.command);
        return parse_theory(selector, allow_unconfirmed);
    };
    if (run.command == "reduce-alt") return cmd_reduce_alt(run, source, theory(), verify, out);
    if (run.command == "reduce-plat") return cmd_reduce_plat(run, source, theory(), verify, out);
    if (run.command == "invariant") return cmd_invariant(run, source, theory(), format, out);
    if (run.command == "exponent") return cmd_exponent(theory(), format);
    if (run.command == "certify") return cmd_certify(run, source, out);
    if (run.command == "render") return cmd_render(run, source, format, out);
    if (run.command == "corpus") return cmd_corpus(run, out);
    if (run.command == "replay") {
        const auto doc = json::parse(read_file(replay_path));
        if (!doc.contains("argv") || !doc["argv"].is_array()) throw ParseError("manifest has no argv");
        auto argv = doc["argv"].get<std::vector<std::string>>();
        if (!argv.empty() && argv.front() == "replay") throw ParseError("refusing to replay a replay");
        return run_cli(argv);
    }
    (void)app;
    return kUsage;
}

int run_cli(std::vector<std::string> args) {
    CLI::App app{"knotpad: knot diagram reductions with exact invariant checks"};
    app.require_subcommand(1);
    std::string source, selector, format = "text", out, manifest, replay_path;
    bool verify = false, allow_unconfirmed = false;

    auto add_theory = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--theory", selector, "tl:<N> or dw:<group>/<class>");
        if (required) opt->required();
        sub->add_flag("--allow-unconfirmed", allow_unconfirmed,
                      "accept a TL exponent given by the bare formula when it cannot be confirmed");
    };
    auto* ra = app.add_subcommand("reduce-alt", "alternating reduction (prime, reduced, alternating output)");
    ra->add_option("input", source, "pd/plat JSON file or corpus:<name>")->required();
    add_theory(ra, true);
    ra->add_flag("--verify", verify, "check the framed invariant relation exactly");
    ra->add_option("--out", out, "output prefix");
    auto* rp = app.add_subcommand("reduce-plat", "plat reduction (highly twisted standard plat output)");
    rp->add_option("input", source, "pd/plat JSON file or corpus:<name>")->required();
    add_theory(rp, true);
    rp->add_flag("--verify", verify, "check the invariant of the output plat exactly");
    rp->add_option("--out", out, "output prefix");
    auto* iv = app.add_subcommand("invariant", "evaluate the theory's invariant");
    iv->add_option("input", source, "pd/plat JSON file or corpus:<name>")->required();
    add_theory(iv, true);
    iv->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    iv->add_option("--out", out, "output file");
    auto* ex = app.add_subcommand("exponent", "twist exponent e of the theory");
    add_theory(ex, true);
    ex->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    auto* ce = app.add_subcommand("certify", "recompute plat certificates and volume bounds");
    ce->add_option("input", source, "plat JSON file or corpus:<name>")->required();
    ce->add_option("--out", out, "output file");
    auto* re = app.add_subcommand("render", "draw a diagram");
    re->add_option("input", source, "pd/plat JSON file or corpus:<name>")->required();
    re->add_option("--format", format, "svg|ascii")->check(CLI::IsMember({"svg", "ascii", "text"}));
    re->add_option("--out", out, "output file");
    auto* co = app.add_subcommand("corpus", "list the bundled corpus (and export it with --out)");
    co->add_option("--out", out, "directory to export into");
    auto* rl = app.add_subcommand("replay", "re-run the command recorded in a run manifest");
    rl->add_option("manifest", replay_path, "manifest JSON")->required();
    app.add_option("--manifest", manifest, "where to write the run manifest (default: <first output>.manifest.json)");

    Run run;
    run.argv = args;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    run.command = app.get_subcommands().front()->get_name();
    if (!source.empty()) run.inputs.push_back(source);
    if (!replay_path.empty()) run.inputs.push_back(replay_path);
    run.theory = selector;
    run.flags["verify"] = verify;
    run.flags["allow_unconfirmed"] = allow_unconfirmed;
    run.flags["format"] = format;
    run.flags["out"] = out;

    const auto start = std::chrono::steady_clock::now();
    int status = kOk;
    try {
        status = dispatch(run, app, source, selector, verify, allow_unconfirmed, format, out, replay_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        status = kParse;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        status = kParse;
    } catch (const NotAKnotError& e) {
        std::cerr << "not a knot: " << e.what() << "\n";
        status = kNotAKnot;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        status = kCap;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        status = kVerify;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        status = kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        status = kUsage;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (run.command != "replay") {
        std::string path = manifest;
        if (path.empty() && !run.outputs.empty()) {
            path = run.outputs.front();
            for (const char* ext : {".report.json", ".pd.json", ".plat.json", ".json", ".svg", ".txt"}) {
                const std::string e = ext;
                if (path.size() > e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) {
                    path.resize(path.size() - e.size());
                    break;
                }
            }
            if (run.command == "corpus") path = (fs::path(out) / "corpus").string();
            path += ".manifest.json";
        }
        if (!path.empty()) write_manifest(run, path, status, seconds);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(std::move(args));
}
