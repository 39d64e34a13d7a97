// Copyright 2026 The bioadv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Clients for externally hosted models.
//
// Wire protocol: line-delimited JSON, one object per line, UTF-8.
//
//   NER  request  {"id":"7","task":"ner","tokens":["Two","mothers"]}
//        response {"id":"7","labels":["O","O"]}
//   STS  request  {"id":"8","task":"sts","s1":"a b","s2":"a c"}
//        response {"id":"8","score":0.5}
//
// An adapter may answer {"id":..,"error":".."} for a request it cannot serve.
//
// Endpoints:
//   http://host:port[/prefix]  request lines are POSTed to <prefix>/infer,
//                              the response body carries the response lines.
//   cmd:<program> [args...]    the program is started once; request lines go
//                              to its stdin, response lines come back on its
//                              stdout (flushed per line).
//
// Responses are matched to requests by id, so adapters may answer out of
// order. Every response is validated (label count and syntax, finite score)
// before it reaches the caller; violations raise ProtocolError.

#pragma once

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"
#include "bioadv/models.hpp"
#include "bioadv/parallel.hpp"
#include "bioadv/text.hpp"
#include "httplib.h"
#include "json.hpp"

extern char** environ;

namespace bioadv {

struct RemoteOptions {
  std::chrono::milliseconds timeout{30'000};
  std::size_t max_in_flight = 4;  // concurrent HTTP requests / unanswered cmd lines
  std::size_t batch_lines = 64;   // request lines per HTTP POST
};

// Moves a batch of request lines to the adapter and returns whatever response
// lines came back (any order).
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::vector<std::string> exchange(const std::vector<std::string>& requests) = 0;
};

class HttpTransport final : public Transport {
 public:
  HttpTransport(std::string base_url, RemoteOptions options) : options_(options) {
    // Split "http://host:port/prefix" into scheme+authority and path prefix.
    const auto authority_start = base_url.find("//");
    const auto path_start = base_url.find('/', authority_start == std::string::npos ? 0 : authority_start + 2);
    if (path_start == std::string::npos) {
      origin_ = base_url;
    } else {
      origin_ = base_url.substr(0, path_start);
      prefix_ = base_url.substr(path_start);
      while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }
  }

  std::vector<std::string> exchange(const std::vector<std::string>& requests) override {
    const std::size_t per_post = std::max<std::size_t>(1, options_.batch_lines);
    const std::size_t posts = (requests.size() + per_post - 1) / per_post;
    std::vector<std::vector<std::string>> answers(posts);
    // Each worker owns a connection and walks its share of the POSTs.
    parallel_slices(posts, options_.max_in_flight, [&](std::size_t begin, std::size_t end) {
      httplib::Client client(origin_);
      const auto secs = options_.timeout.count() / 1000;
      const auto usecs = (options_.timeout.count() % 1000) * 1000;
      client.set_connection_timeout(secs, usecs);
      client.set_read_timeout(secs, usecs);
      client.set_write_timeout(secs, usecs);
      client.set_keep_alive(true);
      for (std::size_t p = begin; p < end; ++p) {
        std::string body;
        for (std::size_t i = p * per_post; i < std::min(requests.size(), (p + 1) * per_post); ++i) {
          body += requests[i];
          body += '\n';
        }
        const auto started = std::chrono::steady_clock::now();
        auto res = client.Post(prefix_ + "/infer", body, "application/x-ndjson");
        if (!res) {
          const auto elapsed = std::chrono::steady_clock::now() - started;
          if (res.error() != httplib::Error::Connection && elapsed >= options_.timeout)
            throw TimeoutError("http adapter at " + origin_ + " timed out after " +
                               std::to_string(options_.timeout.count()) + " ms");
          throw TransportError("http adapter at " + origin_ + ": " + httplib::to_string(res.error()));
        }
        if (res->status != 200)
          throw TransportError("http adapter at " + origin_ + " answered status " + std::to_string(res->status));
        for (const auto line : text::lines(res->body))
          if (!text::trim(line).empty()) answers[p].emplace_back(line);
      }
    });
    std::vector<std::string> out;
    for (auto& a : answers) out.insert(out.end(), std::make_move_iterator(a.begin()), std::make_move_iterator(a.end()));
    return out;
  }

 private:
  RemoteOptions options_;
  std::string origin_;
  std::string prefix_;
};

// Child process speaking the protocol over stdin/stdout. The child's stdio is
// one end of a socketpair so writes after it dies fail with EPIPE instead of
// raising SIGPIPE.
class CommandTransport final : public Transport {
 public:
  CommandTransport(std::string command, RemoteOptions options)
      : argv_(text::split_ws(command)), options_(options) {
    if (argv_.empty()) throw ConfigError("cmd endpoint without a program");
  }

  ~CommandTransport() override { stop(); }

  CommandTransport(const CommandTransport&) = delete;
  CommandTransport& operator=(const CommandTransport&) = delete;

  std::vector<std::string> exchange(const std::vector<std::string>& requests) override {
    std::lock_guard lock(mu_);
    if (pid_ <= 0) start();
    std::vector<std::string> out;
    out.reserve(requests.size());
    const std::size_t window = std::max<std::size_t>(1, options_.max_in_flight);
    std::size_t sent = 0;
    while (out.size() < requests.size()) {
      while (sent < requests.size() && sent - out.size() < window) {
        write_line(requests[sent]);
        ++sent;
      }
      out.push_back(read_line());
    }
    return out;
  }

 private:
  void start() {
    int fds[2];
    if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0)
      throw TransportError(std::string("socketpair: ") + std::strerror(errno));
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, fds[1], STDIN_FILENO);
    posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
    std::vector<char*> argv;
    for (auto& a : argv_) argv.push_back(a.data());
    argv.push_back(nullptr);
    pid_t pid = 0;
    const int rc = ::posix_spawnp(&pid, argv[0], &actions, nullptr, argv.data(), environ);
    posix_spawn_file_actions_destroy(&actions);
    ::close(fds[1]);
    if (rc != 0) {
      ::close(fds[0]);
      throw TransportError("cannot start adapter '" + argv_[0] + "': " + std::strerror(rc));
    }
    pid_ = pid;
    fd_ = fds[0];
    buffer_.clear();
  }

  void stop() {
    if (fd_ >= 0) {
      ::shutdown(fd_, SHUT_RDWR);
      ::close(fd_);
      fd_ = -1;
    }
    if (pid_ > 0) {
      int status = 0;
      for (int i = 0; i < 50; ++i) {
        if (::waitpid(pid_, &status, WNOHANG) != 0) {
          pid_ = -1;
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
      }
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, &status, 0);
      pid_ = -1;
    }
  }

  void write_line(const std::string& line) {
    std::string data = line + '\n';
    std::string_view rest = data;
    while (!rest.empty()) {
      const ssize_t n = ::send(fd_, rest.data(), rest.size(), MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        const std::string why = std::strerror(errno);
        stop();
        throw TransportError("adapter '" + argv_[0] + "' write failed: " + why);
      }
      rest.remove_prefix(static_cast<std::size_t>(n));
    }
  }

  std::string read_line() {
    const auto deadline = std::chrono::steady_clock::now() + options_.timeout;
    for (;;) {
      if (const auto nl = buffer_.find('\n'); nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        return line;
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) {
        stop();
        throw TimeoutError("adapter '" + argv_[0] + "' timed out after " + std::to_string(options_.timeout.count()) +
                           " ms");
      }
      pollfd pfd{fd_, POLLIN, 0};
      const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
      if (ready < 0) {
        if (errno == EINTR) continue;
        throw TransportError(std::string("poll: ") + std::strerror(errno));
      }
      if (ready == 0) continue;
      char chunk[4096];
      const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) {
        stop();
        throw TransportError("adapter '" + argv_[0] + "' closed its output");
      }
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

  std::vector<std::string> argv_;
  RemoteOptions options_;
  std::mutex mu_;
  pid_t pid_ = -1;
  int fd_ = -1;
  std::string buffer_;
};

inline std::unique_ptr<Transport> make_transport(std::string_view endpoint, RemoteOptions options = {}) {
  if (endpoint.starts_with("cmd:")) return std::make_unique<CommandTransport>(std::string(endpoint.substr(4)), options);
  if (endpoint.starts_with("http:")) {
    std::string url(endpoint);
    if (!endpoint.starts_with("http://")) url = "http://" + std::string(endpoint.substr(5));
    return std::make_unique<HttpTransport>(std::move(url), options);
  }
  throw ConfigError("endpoint must start with http: or cmd: ('" + std::string(endpoint) + "')");
}

namespace detail {

// Sends one request per object and returns the responses in request order.
inline std::vector<nlohmann::json> round_trip(Transport& transport, std::atomic<std::uint64_t>& next_id,
                                              std::vector<nlohmann::json> requests) {
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<std::string> lines;
  lines.reserve(requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i) {
    std::string id = std::to_string(next_id.fetch_add(1));
    requests[i]["id"] = id;
    slot.emplace(std::move(id), i);
    lines.push_back(requests[i].dump());
  }
  std::vector<std::optional<nlohmann::json>> responses(requests.size());
  for (const auto& line : transport.exchange(lines)) {
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw ProtocolError("response is not JSON: " + line.substr(0, 200));
    }
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string())
      throw ProtocolError("response lacks a string id: " + line.substr(0, 200));
    const std::string id = obj["id"].get<std::string>();
    const auto it = slot.find(id);
    if (it == slot.end()) throw ProtocolError("response for unknown id '" + id + "'");
    if (responses[it->second]) throw ProtocolError("duplicate response for id '" + id + "'");
    if (obj.contains("error"))
      throw ProtocolError("adapter reported error for id '" + id + "': " + obj["error"].dump());
    responses[it->second] = std::move(obj);
  }
  std::vector<nlohmann::json> out;
  out.reserve(responses.size());
  for (std::size_t i = 0; i < responses.size(); ++i) {
    if (!responses[i]) throw ProtocolError("no response for id '" + requests[i]["id"].get<std::string>() + "'");
    out.push_back(std::move(*responses[i]));
  }
  return out;
}

}  // namespace detail

class RemoteTagger final : public Tagger {
 public:
  RemoteTagger(std::string endpoint, RemoteOptions options = {})
      : endpoint_(std::move(endpoint)), transport_(make_transport(endpoint_, options)) {}

  std::string name() const override { return endpoint_; }

  std::vector<std::string> tag(std::span<const std::string> tokens) const override {
    const std::vector<Sentence> one{Sentence(tokens.begin(), tokens.end())};
    return std::move(tag_batch(one).front());
  }

  std::vector<std::vector<std::string>> tag_batch(std::span<const Sentence> sentences) const override {
    std::vector<nlohmann::json> requests;
    requests.reserve(sentences.size());
    for (const auto& s : sentences) requests.push_back({{"task", "ner"}, {"tokens", s}});
    const auto responses = detail::round_trip(*transport_, next_id_, std::move(requests));
    std::vector<std::vector<std::string>> out;
    out.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const auto& r = responses[i];
      const std::string id = r["id"].get<std::string>();
      if (!r.contains("labels") || !r["labels"].is_array())
        throw ProtocolError("tagger contract: response '" + id + "' has no labels array");
      std::vector<std::string> labels;
      for (const auto& l : r["labels"]) {
        if (!l.is_string()) throw ProtocolError("tagger contract: non-string label in response '" + id + "'");
        labels.push_back(l.get<std::string>());
        if (!is_valid_label(labels.back()))
          throw ProtocolError("tagger contract: invalid IOB label '" + labels.back() + "' in response '" + id + "'");
      }
      if (labels.size() != sentences[i].size())
        throw ProtocolError("tagger contract: response '" + id + "' has " + std::to_string(labels.size()) +
                            " labels for " + std::to_string(sentences[i].size()) + " tokens");
      out.push_back(std::move(labels));
    }
    return out;
  }

 private:
  std::string endpoint_;
  std::unique_ptr<Transport> transport_;
  mutable std::atomic<std::uint64_t> next_id_{0};
};

class RemoteScorer final : public Scorer {
 public:
  RemoteScorer(std::string endpoint, RemoteOptions options = {})
      : endpoint_(std::move(endpoint)), transport_(make_transport(endpoint_, options)) {}

  std::string name() const override { return endpoint_; }

  double score(std::span<const std::string> s1, std::span<const std::string> s2) const override {
    const std::vector<Sentence> a{Sentence(s1.begin(), s1.end())};
    const std::vector<Sentence> b{Sentence(s2.begin(), s2.end())};
    return score_batch(a, b).front();
  }

  std::vector<double> score_batch(std::span<const Sentence> first, std::span<const Sentence> second) const override {
    if (first.size() != second.size()) throw ContractError("score_batch: side length mismatch");
    std::vector<nlohmann::json> requests;
    requests.reserve(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
      requests.push_back({{"task", "sts"}, {"s1", text::join(first[i])}, {"s2", text::join(second[i])}});
    const auto responses = detail::round_trip(*transport_, next_id_, std::move(requests));
    std::vector<double> out;
    out.reserve(first.size());
    for (const auto& r : responses) {
      const std::string id = r["id"].get<std::string>();
      if (!r.contains("score") || !r["score"].is_number())
        throw ProtocolError("scorer contract: response '" + id + "' has no numeric score");
      const double v = r["score"].get<double>();
      if (!std::isfinite(v)) throw ProtocolError("scorer contract: non-finite score in response '" + id + "'");
      out.push_back(v);
    }
    return out;
  }

 private:
  std::string endpoint_;
  std::unique_ptr<Transport> transport_;
  mutable std::atomic<std::uint64_t> next_id_{0};
};

inline std::unique_ptr<Tagger> remote_tagger(std::string endpoint, RemoteOptions options = {}) {
  return std::make_unique<RemoteTagger>(std::move(endpoint), options);
}

inline std::unique_ptr<Scorer> remote_scorer(std::string endpoint, RemoteOptions options = {}) {
  return std::make_unique<RemoteScorer>(std::move(endpoint), options);
}

}  // namespace bioadv
