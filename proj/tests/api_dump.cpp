/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

// Prints one JSON object per line: {"endpoint", "status", "body"} for a
// broad set of API requests. The schema test validates every body.

#include "support.hpp"

#include "syrec/api.hpp"

#include <iostream>

using namespace syrec;
using Json = nlohmann::json;

namespace {
    void emit(const std::string& endpoint, const api::Response& response) {
        nlohmann::ordered_json line;
        line["endpoint"] = endpoint;
        line["status"]   = response.status;
        line["body"]     = response.body;
        std::cout << line.dump() << '\n';
    }

    void post(const std::string& endpoint, const std::string& body) {
        const auto response = api::dispatch("POST", "/api/" + endpoint, body);
        if (!response) {
            throw std::runtime_error("no route for " + endpoint);
        }
        emit(endpoint, *response);
    }

    Json zeroInputs(const std::string& source) {
        Json inputs = Json::object();
        for (const auto& [name, width]: primaryInputs(test::compileOrThrow(source).entryModule())) {
            inputs[name] = width > 1 ? 1 : 0;
        }
        return inputs;
    }
} // namespace

int main() {
    emit("health", api::health());
    for (const auto& file: test::corpusFiles()) {
        const auto source = test::readFile(file);
        post("parse", Json{{"source", source}}.dump());
        post("cost", Json{{"source", source}}.dump());
        for (const std::string mode: {"cost-aware", "line-aware"}) {
            post("synthesize", Json{{"source", source}, {"mode", mode}}.dump());
            post("simulate", Json{{"source", source}, {"mode", mode}, {"inputs", zeroInputs(source)}, {"oracle", true}}.dump());
            post("simulate", Json{{"source", source}, {"mode", mode}, {"inputs", zeroInputs(source)}}.dump());
            post("cost", Json{{"source", source}, {"mode", mode}}.dump());
        }
    }
    const std::string alu = test::corpusSource("alu");
    for (const std::string endpoint: {"parse", "synthesize", "simulate", "cost"}) {
        post(endpoint, "{not json");
        post(endpoint, "[]");
        post(endpoint, Json{{"source", "module"}}.dump());
        post(endpoint, Json{{"source", "module m(inout a(2)) a ^= (a >> 1)"}}.dump());
        post(endpoint, Json{{"source", alu}, {"mode", "sideways"}}.dump());
        post(endpoint, Json{{"source", std::string(api::MAX_SOURCE_BYTES + 1, ' ')}}.dump());
        post(endpoint, Json{{"source", "module m(inout a(2)) a ^= 7"}, {"inputs", {{"a", 1}}}}.dump());
    }
    post("simulate", Json{{"source", alu}, {"inputs", {{"op", 1}}}}.dump());
    post("simulate", Json{{"source", alu}, {"inputs", {{"op", 1}, {"x1", 9}, {"x2", 0}}}}.dump());
    emit("transport", api::failure(404, "no such endpoint"));
    emit("transport", api::failure(413, "request body too large"));
    return 0;
}
