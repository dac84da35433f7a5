/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/server.hpp"

#include "syrec/api.hpp"
#include "syrec/driver.hpp"

#include <cstdlib>
#include <exception>
#include <httplib.h>
#include <iostream>
#include <string>

namespace syrec {
    namespace {
        constexpr int DEFAULT_PORT = 8080;

        void send(httplib::Response& response, const api::Response& result) {
            response.status = result.status;
            response.set_content(result.body.dump(), "application/json");
        }
    } // namespace

    int defaultPort() {
        if (const char* value = std::getenv("SYREC_PORT"); value != nullptr) {
            const auto port = parseUnsigned(value);
            if (port && *port > 0 && *port <= 65535) {
                return static_cast<int>(*port);
            }
            std::cerr << "warning: ignoring invalid SYREC_PORT '" << value << "'\n";
        }
        return DEFAULT_PORT;
    }

    struct Server::Impl {
        ServerOptions   options;
        httplib::Server http;
        int             boundPort = -1;
    };

    Server::Server(ServerOptions options):
        impl(std::make_unique<Impl>()) {
        impl->options = std::move(options);
        auto& http    = impl->http;
        const auto threads = impl->options.threads;
        http.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
        http.set_payload_max_length(impl->options.maxPayloadBytes);

        const auto route = [](const httplib::Request& request, httplib::Response& response) {
            try {
                const auto result = api::dispatch(request.method, request.path, request.body);
                send(response, result ? *result : api::failure(404, "no such endpoint"));
            } catch (const std::exception& error) {
                // Only internal faults reach this point.
                send(response, api::failure(500, std::string("internal error: ") + error.what()));
            }
        };
        http.Get("/api/.*", route);
        http.Post("/api/.*", route);
        http.set_error_handler([](const httplib::Request&, httplib::Response& response) {
            if (response.body.empty()) {
                const auto message = response.status == 413 ? "request body too large" : httplib::status_message(response.status);
                send(response, api::failure(response.status, message));
            }
        });
    }

    Server::~Server() = default;

    bool Server::bind() {
        if (!impl->options.staticDir.empty() && !impl->http.set_mount_point("/", impl->options.staticDir)) {
            return false;
        }
        if (impl->options.port == 0) {
            impl->boundPort = impl->http.bind_to_any_port(impl->options.host);
        } else if (impl->http.bind_to_port(impl->options.host, impl->options.port)) {
            impl->boundPort = impl->options.port;
        }
        return impl->boundPort > 0;
    }

    int Server::port() const {
        return impl->boundPort;
    }

    void Server::run() {
        impl->http.listen_after_bind();
    }

    void Server::stop() {
        impl->http.stop();
    }

    void Server::waitUntilReady() const {
        impl->http.wait_until_ready();
    }
} // namespace syrec
