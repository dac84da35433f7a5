/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include <cstddef>
#include <json.hpp>
#include <optional>
#include <string_view>

namespace syrec::api {
    /// Version of the response layout; bumped on incompatible changes.
    constexpr int SCHEMA_VERSION = 1;
    /// Largest accepted program text in bytes.
    constexpr std::size_t MAX_SOURCE_BYTES = std::size_t{1} << 20U;

    struct Response {
        int                    status = 200;
        nlohmann::ordered_json body;
    };

    /// Handlers take the raw request body. They are pure functions of their
    /// argument: user faults yield 400 (413 for oversized sources) with a
    /// diagnostics list, never an exception.
    [[nodiscard]] Response parse(std::string_view requestBody);
    [[nodiscard]] Response synthesize(std::string_view requestBody);
    [[nodiscard]] Response simulate(std::string_view requestBody);
    [[nodiscard]] Response cost(std::string_view requestBody);
    [[nodiscard]] Response health();

    /// Body used for transport-level failures (unknown route, oversized payload).
    [[nodiscard]] Response failure(int status, std::string_view message);

    /// Routes `POST /api/<endpoint>` and `GET /api/health`; nullopt for
    /// anything else.
    [[nodiscard]] std::optional<Response> dispatch(std::string_view method, std::string_view path, std::string_view requestBody);
} // namespace syrec::api
