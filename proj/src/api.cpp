/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/api.hpp"

#include "syrec/driver.hpp"
#include "syrec/real_format.hpp"
#include "syrec/stats_json.hpp"

#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace syrec::api {
    namespace {
        using Json = nlohmann::ordered_json;

        /// A user fault detected while reading the request.
        struct RequestError {
            int         status;
            Diagnostics diagnostics;
        };

        Json diagnosticsToJson(const Diagnostics& diagnostics) {
            auto list = Json::array();
            for (const auto& diagnostic: diagnostics) {
                Json entry;
                entry["severity"] = toString(diagnostic.severity);
                entry["message"]  = diagnostic.message;
                // Request-level problems have no position in the program text.
                if (diagnostic.span.begin.line != 0) {
                    entry["line"]      = diagnostic.span.begin.line;
                    entry["column"]    = diagnostic.span.begin.column;
                    entry["endLine"]   = diagnostic.span.end.line;
                    entry["endColumn"] = diagnostic.span.end.column;
                }
                list.push_back(std::move(entry));
            }
            return list;
        }

        Diagnostic requestProblem(std::string message) {
            return makeError(std::move(message), SourceSpan{{0, 0}, {0, 0}});
        }

        Json envelope(bool ok, const Diagnostics& diagnostics) {
            Json body;
            body["schemaVersion"] = SCHEMA_VERSION;
            body["ok"]            = ok;
            body["diagnostics"]   = diagnosticsToJson(diagnostics);
            return body;
        }

        Response reject(const RequestError& error) {
            return Response{error.status, envelope(false, error.diagnostics)};
        }

        Response reject(int status, std::string message) {
            return reject(RequestError{status, {requestProblem(std::move(message))}});
        }

        struct Request {
            std::string                  source;
            std::optional<SynthesisMode> mode;
            PipelineOptions              options;
            SignalState                  inputs;
            bool                         oracle = false;
        };

        Request readRequest(std::string_view text) {
            const auto json = Json::parse(text, nullptr, false);
            if (json.is_discarded()) {
                throw RequestError{400, {requestProblem("malformed JSON request body")}};
            }
            if (!json.is_object()) {
                throw RequestError{400, {requestProblem("request body must be a JSON object")}};
            }
            Request request;
            const auto source = json.find("source");
            if (source == json.end() || !source->is_string()) {
                throw RequestError{400, {requestProblem("field 'source' must be a string")}};
            }
            request.source = source->get<std::string>();
            if (request.source.size() > MAX_SOURCE_BYTES) {
                throw RequestError{413, {requestProblem("source exceeds " + std::to_string(MAX_SOURCE_BYTES) + " bytes")}};
            }
            if (const auto mode = json.find("mode"); mode != json.end()) {
                const auto parsed = mode->is_string() ? parseSynthesisMode(mode->get<std::string>()) : std::nullopt;
                if (!parsed) {
                    throw RequestError{400, {requestProblem("field 'mode' must be \"cost-aware\" or \"line-aware\"")}};
                }
                request.mode         = parsed;
                request.options.mode = *parsed;
            }
            if (const auto width = json.find("width"); width != json.end()) {
                if (!width->is_number_unsigned() || width->get<std::uint64_t>() < 1 || width->get<std::uint64_t>() > 64) {
                    throw RequestError{400, {requestProblem("field 'width' must be an integer between 1 and 64")}};
                }
                request.options.defaultWidth = width->get<unsigned>();
            }
            if (const auto inputs = json.find("inputs"); inputs != json.end()) {
                if (!inputs->is_object()) {
                    throw RequestError{400, {requestProblem("field 'inputs' must be an object")}};
                }
                for (const auto& [name, value]: inputs->items()) {
                    std::optional<std::uint64_t> number;
                    if (value.is_number_unsigned()) {
                        number = value.get<std::uint64_t>();
                    } else if (value.is_string()) {
                        number = parseUnsigned(value.get<std::string>());
                    }
                    if (!number) {
                        throw RequestError{400, {requestProblem("input '" + name + "' must be a non-negative integer")}};
                    }
                    request.inputs[name] = *number;
                }
            }
            if (const auto oracle = json.find("oracle"); oracle != json.end()) {
                if (!oracle->is_boolean()) {
                    throw RequestError{400, {requestProblem("field 'oracle' must be a boolean")}};
                }
                request.oracle = oracle->get<bool>();
            }
            return request;
        }

        ElaboratedProgram compileOrReject(const Request& request, Diagnostics& warnings) {
            auto result = compile(request.source, frontendSettings(request.options));
            if (!result.ok()) {
                throw RequestError{400, std::move(result.diagnostics)};
            }
            warnings = std::move(result.diagnostics);
            return std::move(*result.program);
        }

        SynthesisResult synthesizeOrReject(const ElaboratedProgram& program, SynthesisMode mode) {
            try {
                return syrec::synthesize(program, mode);
            } catch (const SynthesisError& error) {
                throw RequestError{400, {requestProblem(error.what())}};
            }
        }

        Json circuitToJson(const Circuit& circuit) {
            Json lines = Json::array();
            for (std::size_t i = 0; i < circuit.numLines(); ++i) {
                const auto& line = circuit.lines()[i];
                Json        entry;
                entry["index"]    = i;
                entry["label"]    = line.label;
                entry["constant"] = line.isConstant;
                entry["garbage"]  = line.isGarbage;
                entry["input"]    = line.inputName ? Json(*line.inputName) : Json(nullptr);
                entry["output"]   = line.outputName ? Json(*line.outputName) : Json(nullptr);
                lines.push_back(std::move(entry));
            }
            Json gates = Json::array();
            for (const auto& gate: circuit.gates()) {
                Json entry;
                entry["kind"]     = gate.kind == GateKind::Mct ? "mct" : "mcf";
                entry["controls"] = gate.controls;
                entry["targets"]  = gate.targets;
                gates.push_back(std::move(entry));
            }
            Json json;
            json["lines"] = std::move(lines);
            json["gates"] = std::move(gates);
            return json;
        }

        Json signalsToJson(const std::vector<std::pair<std::string, std::uint64_t>>& values) {
            Json json = Json::object();
            for (const auto& [name, value]: values) {
                json[name] = value;
            }
            return json;
        }

        /// Runs `body`, mapping user faults to their responses.
        template<typename Handler>
        Response guarded(std::string_view text, Handler&& body) {
            try {
                return body(readRequest(text));
            } catch (const RequestError& error) {
                return reject(error);
            }
        }
    } // namespace

    Response parse(std::string_view requestBody) {
        return guarded(requestBody, [](const Request& request) {
            Diagnostics warnings;
            const auto  program = compileOrReject(request, warnings);
            auto        body    = envelope(true, warnings);
            body["entry"]       = program.entry;
            Json modules        = Json::array();
            for (const auto& module: program.program.modules) {
                Json signals = Json::array();
                for (const auto& param: module.params) {
                    signals.push_back(Json{{"name", param.name}, {"kind", toString(param.direction)}, {"width", param.width.value_or(0)}});
                }
                for (const auto& local: module.locals) {
                    signals.push_back(Json{{"name", local.name}, {"kind", toString(local.kind)}, {"width", local.width.value_or(0)}});
                }
                modules.push_back(Json{{"name", module.name}, {"signals", std::move(signals)}});
            }
            body["modules"] = std::move(modules);
            return Response{200, std::move(body)};
        });
    }

    Response synthesize(std::string_view requestBody) {
        return guarded(requestBody, [](const Request& request) {
            Diagnostics warnings;
            const auto  program = compileOrReject(request, warnings);
            const auto  mode    = request.options.mode;
            const auto  result  = synthesizeOrReject(program, mode);
            auto        body    = envelope(true, warnings);
            body["mode"]        = toString(mode);
            body["stats"]       = statsToJson(result.stats, toString(mode), program.entry);
            body["real"]        = emitReal(result.circuit);
            body["circuit"]     = circuitToJson(result.circuit);
            return Response{200, std::move(body)};
        });
    }

    Response simulate(std::string_view requestBody) {
        return guarded(requestBody, [](const Request& request) {
            Diagnostics warnings;
            const auto  program = compileOrReject(request, warnings);
            if (auto problems = checkInputs(program, request.inputs); hasErrors(problems)) {
                for (auto& problem: problems) {
                    problem.span = SourceSpan{{0, 0}, {0, 0}};
                }
                throw RequestError{400, std::move(problems)};
            }
            const auto mode    = request.options.mode;
            const auto result  = synthesizeOrReject(program, mode);
            const auto outputs = orderedOutputs(result.binding, syrec::simulate(result, request.inputs));
            auto       body    = envelope(true, warnings);
            body["mode"]       = toString(mode);
            body["outputs"]    = signalsToJson(outputs);
            if (request.oracle) {
                SignalState finalState;
                try {
                    finalState = interpret(program, request.inputs).finalState;
                } catch (const InterpreterError& error) {
                    throw RequestError{400, {requestProblem(error.what())}};
                }
                const auto expected = orderedOutputs(result.binding, finalState);
                body["oracle"]      = Json{{"outputs", signalsToJson(expected)}, {"agrees", expected == outputs}};
            }
            return Response{200, std::move(body)};
        });
    }

    Response cost(std::string_view requestBody) {
        return guarded(requestBody, [](const Request& request) {
            Diagnostics warnings;
            const auto  program = compileOrReject(request, warnings);
            std::vector<SynthesisMode> modes{SynthesisMode::CostAware, SynthesisMode::LineAware};
            if (request.mode) {
                modes = {*request.mode};
            }
            auto body       = envelope(true, warnings);
            body["program"] = program.entry;
            Json reports    = Json::array();
            for (const auto mode: modes) {
                reports.push_back(statsToJson(synthesizeOrReject(program, mode).stats, toString(mode), program.entry));
            }
            body["reports"] = std::move(reports);
            return Response{200, std::move(body)};
        });
    }

    Response health() {
        Json body;
        body["ok"]            = true;
        body["schemaVersion"] = SCHEMA_VERSION;
        return Response{200, std::move(body)};
    }

    Response failure(int status, std::string_view message) {
        return reject(status, std::string(message));
    }

    std::optional<Response> dispatch(std::string_view method, std::string_view path, std::string_view requestBody) {
        if (method == "GET" && path == "/api/health") {
            return health();
        }
        if (method != "POST") {
            return std::nullopt;
        }
        if (path == "/api/parse") {
            return parse(requestBody);
        }
        if (path == "/api/synthesize") {
            return synthesize(requestBody);
        }
        if (path == "/api/simulate") {
            return simulate(requestBody);
        }
        if (path == "/api/cost") {
            return cost(requestBody);
        }
        return std::nullopt;
    }
} // namespace syrec::api
