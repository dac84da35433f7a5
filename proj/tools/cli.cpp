/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "cli.hpp"

#include "syrec/driver.hpp"
#include "syrec/real_format.hpp"
#include "syrec/server.hpp"
#include "syrec/simulator.hpp"
#include "syrec/stats_json.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace syrec::cli {
    namespace {
        /// Circuits up to this many lines are additionally checked for bijectivity.
        constexpr std::size_t REVERSIBILITY_CHECK_LINES = 16;
        /// Programs with at most this many input bits are checked exhaustively.
        constexpr std::size_t EXHAUSTIVE_INPUT_BITS = 16;

        struct Common {
            std::string path;
            std::string mode;
            unsigned    width = 32;
        };

        struct IoFailure {
            std::string message;
        };

        std::string readFile(const std::string& path) {
            std::ifstream stream(path, std::ios::binary);
            if (!stream) {
                throw IoFailure{"cannot read '" + path + "'"};
            }
            std::ostringstream buffer;
            buffer << stream.rdbuf();
            return buffer.str();
        }

        void writeFile(const std::string& path, const std::string& content) {
            std::ofstream stream(path, std::ios::binary);
            if (!stream || !(stream << content) || !stream.flush()) {
                throw IoFailure{"cannot write '" + path + "'"};
            }
        }

        void addCommon(CLI::App& command, Common& common, bool withMode) {
            command.add_option("file", common.path, "SyReC source file")->required();
            if (withMode) {
                command.add_option("-m,--mode", common.mode, "cost-aware or line-aware")->check(CLI::IsMember({"cost-aware", "line-aware"}));
            }
            command.add_option("-w,--width", common.width, "default signal width")->check(CLI::Range(1U, 64U));
        }

        std::vector<SynthesisMode> selectedModes(const Common& common, bool bothByDefault) {
            if (!common.mode.empty()) {
                return {*parseSynthesisMode(common.mode)};
            }
            if (bothByDefault) {
                return {SynthesisMode::CostAware, SynthesisMode::LineAware};
            }
            return {PipelineOptions{}.mode};
        }

        class Session {
        public:
            Session(const Common& common, std::ostream& err):
                common(common), err(err) {}

            /// Compiles the input; diagnostics go to the error stream.
            std::optional<ElaboratedProgram> load() {
                PipelineOptions options;
                options.defaultWidth = common.width;
                auto result          = compile(readFile(common.path), frontendSettings(options));
                report(result.diagnostics);
                return std::move(result.program);
            }

            void report(const syrec::Diagnostics& diagnostics) const {
                for (const auto& diagnostic: diagnostics) {
                    printDiagnostic(err, common.path, diagnostic);
                }
            }

            void error(const std::string& message) const {
                err << common.path << ": error: " << message << '\n';
            }

        private:
            const Common& common;
            std::ostream& err;
        };

        int synthCommand(const Common& common, const std::string& output, const std::string& statsPath, std::ostream& out, std::ostream& err) {
            Session    session(common, err);
            const auto program = session.load();
            if (!program) {
                return ExitCode::Diagnostics;
            }
            const auto mode = selectedModes(common, false).front();
            SynthesisResult result;
            try {
                result = synthesize(*program, mode);
            } catch (const SynthesisError& error) {
                session.error(error.what());
                return ExitCode::Diagnostics;
            }
            const auto realPath = output.empty() ? std::filesystem::path(common.path).replace_extension(".real").string() : output;
            const auto stats    = emitStats(result.stats, toString(mode), program->entry);
            if (realPath == "-") {
                out << emitReal(result.circuit);
            } else {
                writeFile(realPath, emitReal(result.circuit));
            }
            if (!statsPath.empty()) {
                writeFile(statsPath, stats + "\n");
            }
            if (realPath != "-") {
                out << stats << '\n';
            }
            return ExitCode::Success;
        }

        int simCommand(const Common& common, const std::vector<std::string>& assignments, bool oracle, std::ostream& out, std::ostream& err) {
            Session    session(common, err);
            const auto program = session.load();
            if (!program) {
                return ExitCode::Diagnostics;
            }
            SignalState inputs;
            for (const auto& assignment: assignments) {
                const auto equal = assignment.find('=');
                const auto value = equal == std::string::npos ? std::nullopt : parseUnsigned(std::string_view(assignment).substr(equal + 1));
                if (equal == 0 || !value) {
                    session.error("malformed assignment '" + assignment + "', expected name=value");
                    return ExitCode::Diagnostics;
                }
                inputs[assignment.substr(0, equal)] = *value;
            }
            if (const auto problems = checkInputs(*program, inputs); hasErrors(problems)) {
                for (const auto& problem: problems) {
                    session.error(problem.message);
                }
                return ExitCode::Diagnostics;
            }
            const auto mode = selectedModes(common, false).front();
            SynthesisResult result;
            try {
                result = synthesize(*program, mode);
            } catch (const SynthesisError& error) {
                session.error(error.what());
                return ExitCode::Diagnostics;
            }
            const auto outputs = orderedOutputs(result.binding, simulate(result, inputs));
            for (const auto& [name, value]: outputs) {
                out << name << '=' << value << '\n';
            }
            if (oracle) {
                try {
                    const auto expected = orderedOutputs(result.binding, interpret(*program, inputs).finalState);
                    if (expected != outputs) {
                        session.error("circuit disagrees with the interpreter");
                        for (const auto& [name, value]: expected) {
                            err << "  expected " << name << '=' << value << '\n';
                        }
                        return ExitCode::Diagnostics;
                    }
                } catch (const InterpreterError& error) {
                    session.error(error.what());
                    return ExitCode::Diagnostics;
                }
            }
            return ExitCode::Success;
        }

        int costCommand(const Common& common, bool json, std::ostream& out, std::ostream& err) {
            Session    session(common, err);
            const auto program = session.load();
            if (!program) {
                return ExitCode::Diagnostics;
            }
            auto reports = nlohmann::ordered_json::array();
            if (!json) {
                out << std::left << std::setw(11) << "mode" << std::right << ' ' << std::setw(7) << "lines" << ' ' << std::setw(10) << "constants" << ' ' << std::setw(8) << "garbage" << ' ' << std::setw(8) << "gates" << ' ' << std::setw(12) << "quantumCost" << '\n';
            }
            for (const auto mode: selectedModes(common, true)) {
                CircuitStats stats;
                try {
                    stats = synthesize(*program, mode).stats;
                } catch (const SynthesisError& error) {
                    session.error(error.what());
                    return ExitCode::Diagnostics;
                }
                if (json) {
                    reports.push_back(statsToJson(stats, toString(mode), program->entry));
                } else {
                    out << std::left << std::setw(11) << toString(mode) << std::right << ' ' << std::setw(7) << stats.lineCount << ' ' << std::setw(10) << stats.constantLineCount << ' ' << std::setw(8) << stats.garbageCount << ' ' << std::setw(8) << stats.gateCount << ' ' << std::setw(12) << stats.quantumCost << '\n';
                }
            }
            if (json) {
                out << reports.dump() << '\n';
            }
            return ExitCode::Success;
        }

        /// Input assignments for the check command: exhaustive when small,
        /// otherwise `samples` seeded random draws.
        std::vector<SignalState> checkInputsFor(const ModuleDecl& module, std::size_t samples, std::uint64_t seed) {
            const auto  inputs = primaryInputs(module);
            std::size_t bits   = 0;
            for (const auto& input: inputs) {
                bits += input.second;
            }
            std::vector<SignalState> result;
            const auto               assign = [&](auto&& next) {
                SignalState state;
                for (const auto& [name, width]: inputs) {
                    state[name] = next(width);
                }
                result.push_back(std::move(state));
            };
            if (bits <= EXHAUSTIVE_INPUT_BITS) {
                for (std::uint64_t word = 0; word < (std::uint64_t{1} << bits); ++word) {
                    unsigned offset = 0;
                    assign([&](unsigned width) {
                        const auto value = (word >> offset) & ((std::uint64_t{1} << width) - 1U);
                        offset += width;
                        return value;
                    });
                }
                return result;
            }
            std::mt19937_64 random(seed);
            for (std::size_t k = 0; k < samples; ++k) {
                assign([&](unsigned width) { return width >= 64 ? random() : random() & ((std::uint64_t{1} << width) - 1U); });
            }
            return result;
        }

        int checkCommand(const Common& common, std::size_t samples, std::uint64_t seed, std::ostream& out, std::ostream& err) {
            Session    session(common, err);
            const auto program = session.load();
            if (!program) {
                return ExitCode::Diagnostics;
            }
            const auto cases  = checkInputsFor(program->entryModule(), samples, seed);
            bool       passed = true;
            for (const auto mode: selectedModes(common, true)) {
                SynthesisResult result;
                try {
                    result = synthesize(*program, mode);
                } catch (const SynthesisError& error) {
                    session.error(error.what());
                    return ExitCode::Diagnostics;
                }
                std::size_t agreeing = 0;
                for (const auto& inputs: cases) {
                    try {
                        const auto expected = orderedOutputs(result.binding, interpret(*program, inputs).finalState);
                        if (expected == orderedOutputs(result.binding, simulate(result, inputs))) {
                            ++agreeing;
                        }
                    } catch (const InterpreterError& error) {
                        session.error(error.what());
                        return ExitCode::Diagnostics;
                    }
                }
                out << toString(mode) << ": " << agreeing << '/' << cases.size() << " input assignments agree with the interpreter";
                if (result.circuit.numLines() <= REVERSIBILITY_CHECK_LINES) {
                    const auto report = checkReversible(result.circuit);
                    out << (report.reversible ? ", circuit is a bijection" : ", circuit is NOT a bijection");
                    passed = passed && report.reversible;
                }
                out << '\n';
                passed = passed && agreeing == cases.size();
            }
            return passed ? ExitCode::Success : ExitCode::Diagnostics;
        }

        int serveCommand(const ServerOptions& options, std::ostream& out, std::ostream& err) {
            Server server(options);
            if (!server.bind()) {
                err << "error: cannot listen on " << options.host << ':' << options.port;
                if (!options.staticDir.empty()) {
                    err << " or mount '" << options.staticDir << "'";
                }
                err << '\n';
                return ExitCode::IoError;
            }
            out << "listening on http://" << options.host << ':' << server.port() << '\n' << std::flush;
            server.run();
            return ExitCode::Success;
        }
    } // namespace

    int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
        CLI::App app{"SyReC reversible circuit compiler"};
        app.name("syrec");
        app.require_subcommand(1);

        Common common;

        auto*       synth = app.add_subcommand("synth", "synthesize a program into a .real circuit");
        std::string output;
        std::string statsPath;
        addCommon(*synth, common, true);
        synth->add_option("-o,--output", output, "circuit file, '-' for standard output (default: <file>.real)");
        synth->add_option("--stats", statsPath, "also write the statistics JSON to this file");

        auto*                    sim = app.add_subcommand("sim", "simulate the synthesized circuit");
        std::vector<std::string> assignments;
        bool                     oracle = false;
        addCommon(*sim, common, true);
        sim->add_option("-s,--set", assignments, "input assignment name=value");
        sim->add_flag("--oracle", oracle, "compare against the reference interpreter");

        auto* cost = app.add_subcommand("cost", "report line, gate and quantum cost (both modes by default)");
        bool  json = false;
        addCommon(*cost, common, true);
        cost->add_flag("--json", json, "print the statistics as JSON");

        auto*         check   = app.add_subcommand("check", "compare circuits against the interpreter");
        std::size_t   samples = 1000;
        std::uint64_t seed    = 1;
        addCommon(*check, common, true);
        check->add_option("--samples", samples, "random assignments when exhaustive checking is too large");
        check->add_option("--seed", seed, "seed of the random assignments");

        auto*         serve = app.add_subcommand("serve", "run the HTTP/JSON service");
        ServerOptions serverOptions;
        serverOptions.port = defaultPort();
#ifdef SYREC_DEFAULT_WEB_DIR
        serverOptions.staticDir = SYREC_DEFAULT_WEB_DIR;
#endif
        serve->add_option("-p,--port", serverOptions.port, "port (default: $SYREC_PORT or 8080)")->check(CLI::Range(0, 65535));
        serve->add_option("--host", serverOptions.host, "address to bind");
        auto* staticOption = serve->add_option("--static", serverOptions.staticDir, "directory served at /");
        serve->add_option("--threads", serverOptions.threads, "worker threads")->check(CLI::Range(1, 256));

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& error) {
            const auto code = app.exit(error, out, err);
            return code == 0 ? ExitCode::Success : ExitCode::IoError;
        }

        try {
            if (*synth) {
                return synthCommand(common, output, statsPath, out, err);
            }
            if (*sim) {
                return simCommand(common, assignments, oracle, out, err);
            }
            if (*cost) {
                return costCommand(common, json, out, err);
            }
            if (*check) {
                return checkCommand(common, samples, seed, out, err);
            }
            if (staticOption->count() == 0 && !std::filesystem::is_directory(serverOptions.staticDir)) {
                serverOptions.staticDir.clear();
            }
            return serveCommand(serverOptions, out, err);
        } catch (const IoFailure& failure) {
            err << "error: " << failure.message << '\n';
            return ExitCode::IoError;
        }
    }
} // namespace syrec::cli
