#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "legch/error.hpp"
#include "legch/io.hpp"
#include "legch/repro.hpp"

using namespace legch;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsageError = 2;

std::string sha256(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

/// Records every input read and artifact written, for --manifest.
class Run {
public:
    Json read(const std::string& path) {
        auto text = io::read_text(path);
        inputs_.push_back({{"path", path}, {"sha256", sha256(text)}});
        return io::parse_json(text, path == "-" ? "<stdin>" : path);
    }

    /// Writes to `emit`, or to standard output when it is empty.
    void write(const std::string& text, const std::string& emit) {
        if (emit.empty() || emit == "-") {
            std::cout << text << std::flush;
        } else {
            std::ofstream out(emit, std::ios::binary);
            if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + emit + "'");
            out << text;
        }
        outputs_.push_back({{"path", emit.empty() ? "-" : emit}, {"sha256", sha256(text)}});
    }

    void write_manifest(const std::string& path, const std::vector<std::string>& argv, int code, double seconds) const {
        Json m;
        m["schema"] = "manifest.v1";
        m["tool"] = "legch";
        m["version"] = LEGCH_VERSION;
        m["command"] = argv;
        m["inputs"] = inputs_.empty() ? Json::array() : Json(inputs_);
        m["outputs"] = outputs_.empty() ? Json::array() : Json(outputs_);
        m["exit_code"] = code;
        m["wall_seconds"] = seconds;
        std::ofstream out(path, std::ios::binary);
        out << io::dump(m);
    }

private:
    std::vector<Json> inputs_;
    std::vector<Json> outputs_;
};

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::SchemaError:
        case ErrorCode::InvalidArgument:
        case ErrorCode::EvenParameter:
        case ErrorCode::TooSmall:
        case ErrorCode::BadSummand:
        case ErrorCode::BadPower: return true;
        default: return false;
    }
}

std::string summary_line(const std::vector<int>& fly, const FamilyRow& row) {
    std::string f;
    for (std::size_t i = 0; i < fly.size(); ++i) f += (i ? "," : "") + std::to_string(fly[i]);
    const auto& v = row.verdict;
    return "fly {" + f + "} j=" + std::to_string(row.power) + ": tau " + v.tau_value.str() + ", certificate " +
           (v.certificate_ok ? "ok" : "failed") + ", " + to_string(v.conclusion);
}

}  // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> args(argv, argv + argc);

    CLI::App app{"Legendrian contact homology calculator over Z2", "legch"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", LEGCH_VERSION);
    std::string manifest;
    app.add_option("--manifest", manifest, "Write a run manifest (inputs, outputs, digests) to this path");

    Run run;
    int status = kOk;
    std::function<void()> action;

    // build torus --n N
    auto* build = app.add_subcommand("build", "Build a knot DGA");
    build->require_subcommand(1);
    auto* torus = build->add_subcommand("torus", "Max-tb positive (n,2) torus knot");
    int n = 3;
    std::string build_emit;
    torus->add_option("--n", n, "Odd n >= 3")->required();
    torus->add_option("--emit", build_emit, "Output path (default: stdout)");
    torus->callback([&] { action = [&] { run.write(io::dump(io::dga_to_json(torus_knot_dga(n))), build_emit); }; });

    // tangle --closure a2 --prefix k1 [input]
    auto* tangle = app.add_subcommand("tangle", "Open a knot DGA at its closure crossing");
    std::string tangle_in = "-", closure = "a2", prefix, tangle_emit;
    tangle->add_option("input", tangle_in, "dga.v1 file, or - for stdin");
    tangle->add_option("--closure", closure, "Closure crossing")->capture_default_str();
    tangle->add_option("--prefix", prefix, "Namespace prefix for every generator");
    tangle->add_option("--emit", tangle_emit, "Output path (default: stdout)");
    tangle->callback([&] {
        action = [&] {
            auto dga = io::dga_from_json(run.read(tangle_in));
            run.write(io::dump(io::tangle_to_json(tangle_from_knot(dga, Symbol(closure), prefix))), tangle_emit);
        };
    });

    // sum t1.json t2.json ...
    auto* sum = app.add_subcommand("sum", "Connected sum of tangles in the given order");
    std::vector<std::string> sum_in;
    std::string sum_closure = "a", sum_emit;
    sum->add_option("tangles", sum_in, "tangle.v1 files, in order")->required();
    sum->add_option("--closure", sum_closure, "Name of the closure crossing")->capture_default_str();
    sum->add_option("--emit", sum_emit, "Output path (default: stdout)");
    sum->callback([&] {
        action = [&] {
            std::vector<Tangle> tangles;
            for (const auto& path : sum_in) tangles.push_back(io::tangle_from_json(run.read(path)));
            run.write(io::dump(io::dga_to_json(connect_sum(tangles, sum_closure))), sum_emit);
        };
    });

    // classify [input]
    auto* classify = app.add_subcommand("classify", "Even d-class test");
    std::string classify_in = "-", classify_emit;
    classify->add_option("input", classify_in, "dga.v1 file, or - for stdin");
    classify->add_option("--emit", classify_emit, "Output path (default: stdout)");
    classify->callback([&] {
        action = [&] {
            auto dga = io::dga_from_json(run.read(classify_in));
            run.write(io::dump(io::class_report_to_json(is_even_delta_class(dga))), classify_emit);
        };
    });

    // check [input]
    auto* check = app.add_subcommand("check", "Validate a DGA (degrees, d^2 = 0, action); exit 1 when invalid");
    std::string check_in = "-", check_emit;
    check->add_option("input", check_in, "dga.v1 file, or - for stdin");
    check->add_option("--emit", check_emit, "Output path (default: stdout)");
    check->callback([&] {
        action = [&] {
            auto report = check_dga(io::dga_from_json(run.read(check_in)));
            run.write(io::dump(io::validation_to_json(report)), check_emit);
            if (!report.ok()) status = kValidationFailure;
        };
    });

    // word [input]
    auto* word = app.add_subcommand("word", "Associated word of a tangle");
    std::string word_in = "-", word_emit;
    word->add_option("input", word_in, "tangle.v1 file, or - for stdin");
    word->add_option("--emit", word_emit, "Output path (default: stdout)");
    word->callback([&] {
        action = [&] {
            auto t = io::tangle_from_json(run.read(word_in));
            Json out{{"prefix", t.prefix}, {"word", io::poly_text(t.word)}, {"length", io::count_json(t.word.length())}};
            run.write(io::dump(out), word_emit);
        };
    });

    // script run [input]
    auto* script = app.add_subcommand("script", "Reidemeister move scripts");
    script->require_subcommand(1);
    auto* script_run = script->add_subcommand("run", "Compose the holonomies of a script into its monodromy");
    std::string script_in = "-", script_emit;
    script_run->add_option("input", script_in, "script.v1 file, or - for stdin");
    script_run->add_option("--emit", script_emit, "Output path (default: stdout)");
    script_run->callback([&] {
        action = [&] {
            auto s = io::script_from_json(run.read(script_in));
            auto m = run_script(s);
            run.write(io::dump(io::monodromy_to_json(m, s.mode)), script_emit);
        };
    });

    // verdict --fly 3,7 --power 1,2,3
    auto* verdict_cmd = app.add_subcommand("verdict", "Kalman-loop verdicts for fly # trefoil");
    std::vector<int> fly, powers{1, 2, 3};
    std::string witness = "b3", marker = "b3", verdict_emit;
    unsigned workers = 0;
    verdict_cmd->add_option("--fly", fly, "Torus summands of the fly, e.g. 3,7")->delimiter(',');
    verdict_cmd->add_option("--power", powers, "Loop powers in {1,2,3}")->delimiter(',')->capture_default_str();
    verdict_cmd->add_option("--witness", witness, "Degree 0 witness generator")->capture_default_str();
    verdict_cmd->add_option("--marker", marker, "Degree 0 marker generator")->capture_default_str();
    verdict_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
    verdict_cmd->add_option("--emit", verdict_emit, "Write verdict.v1 here and print a summary instead");
    verdict_cmd->callback([&] {
        action = [&] {
            FamilyOptions opts{Symbol(witness), Symbol(marker), workers};
            auto fam = family_verdicts(fly, {powers.begin(), powers.end()}, opts);
            run.write(io::dump(io::family_to_json(fam)), verdict_emit);
            if (!verdict_emit.empty())
                for (const auto& row : fam.rows) std::cout << summary_line(fly, row) << "\n";
        };
    });

    // verify all | fibonacci --max-n N
    auto* verify = app.add_subcommand("verify", "Reproduce the acceptance tables");
    std::string target = "all", verify_emit;
    int max_n = 20;
    verify->add_option("target", target, "all or fibonacci")
        ->check(CLI::IsMember({"all", "fibonacci"}))
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "Largest n for the Fibonacci table")->check(CLI::Range(1, 90));
    verify->add_option("--emit", verify_emit, "Also write the results as JSON here");
    verify->callback([&] {
        action = [&] {
            Json out;
            std::ostringstream text;
            bool ok = true;
            if (target == "fibonacci") {
                text << std::setw(4) << "n" << std::setw(12) << "B11" << std::setw(12) << "B12" << std::setw(12) << "B21"
                     << std::setw(12) << "B22" << "  match\n";
                Json rows = Json::array();
                for (const auto& row : repro::fibonacci_table(max_n)) {
                    text << std::setw(4) << row.n;
                    for (const auto& len : row.lengths) text << std::setw(12) << len.str();
                    text << "  " << (row.match ? "yes" : "NO") << "\n";
                    ok = ok && row.match;
                    Json lengths = Json::array();
                    for (const auto& len : row.lengths) lengths.push_back(io::count_json(len));
                    rows.push_back({{"n", row.n}, {"lengths", lengths}, {"expected", row.expected}, {"match", row.match}});
                }
                out = {{"schema", "fibonacci.v1"}, {"rows", rows}, {"ok", ok}};
            } else {
                Json rows = Json::array();
                for (const auto& r : repro::run_all()) {
                    text << repro::format(r) << "\n";
                    ok = ok && r.passed;
                    rows.push_back({{"id", r.id},
                                    {"name", r.name},
                                    {"passed", r.passed},
                                    {"seconds", r.seconds},
                                    {"budget_seconds", r.budget},
                                    {"detail", r.detail}});
                }
                out = {{"schema", "acceptance.v1"}, {"criteria", rows}, {"ok", ok}};
            }
            std::cout << text.str() << std::flush;
            if (!verify_emit.empty()) run.write(io::dump(out), verify_emit);
            if (!ok) status = kValidationFailure;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        action();
    } catch (const Error& e) {
        std::cerr << "legch: " << e.what() << "\n";
        status = is_usage_error(e.code()) ? kUsageError : kValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << "legch: " << e.what() << "\n";
        status = kValidationFailure;
    }

    if (!manifest.empty()) {
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        run.write_manifest(manifest, args, status, seconds);
    }
    return status;
}
