/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace syrec {
    struct ServerOptions {
        std::string host = "127.0.0.1";
        /// 0 picks a free port.
        int         port = 8080;
        /// Directory mounted at `/`; empty disables static files.
        std::string staticDir;
        /// Worker threads; requests beyond this are queued, so a slow
        /// synthesis never starves health checks of every worker.
        std::size_t threads = 8;
        /// Transport limit on request bodies; larger payloads get 413.
        std::size_t maxPayloadBytes = std::size_t{4} << 20U;
    };

    /// Port from SYREC_PORT when set to a valid number, otherwise 8080.
    [[nodiscard]] int defaultPort();

    /// HTTP/JSON front end of the api handlers.
    class Server {
    public:
        explicit Server(ServerOptions options);
        ~Server();
        Server(const Server&)            = delete;
        Server& operator=(const Server&) = delete;

        /// Binds the socket; false when the port is unavailable or the
        /// static directory does not exist.
        [[nodiscard]] bool bind();
        /// Port actually bound (useful with port 0).
        [[nodiscard]] int port() const;
        /// Serves until stop() is called. Requires a successful bind().
        void run();
        void stop();
        void waitUntilReady() const;

    private:
        struct Impl;
        std::unique_ptr<Impl> impl;
    };
} // namespace syrec
