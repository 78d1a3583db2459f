#ifndef ARGANNOT_SERVER_H_
#define ARGANNOT_SERVER_H_

#include <filesystem>
#include <memory>
#include <string>

#include "argannot/store.h"

namespace argannot {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Built UI bundle served under "/"; empty disables static serving.
  std::filesystem::path static_dir;
};

// HTTP/JSON front end of a CorpusStore. Bodies are the file formats
// verbatim; errors are {"error": {"code", "message"}}.
class Server {
 public:
  Server(CorpusStore &store, ServerOptions options);
  ~Server();
  Server(const Server &) = delete;
  Server &operator=(const Server &) = delete;

  // Binds the socket and returns the bound port; throws kIoError.
  int Bind();
  // Serves until Stop(); requires Bind().
  void Run();
  void Stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace argannot

#endif  // ARGANNOT_SERVER_H_
