#include <cstdlib>
#include <iostream>

#include "grassline/tools/cli.hpp"

int main(int argc, char** argv) {
  using namespace grassline::tools;
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* env = std::getenv("GRASSLINE_BOUNDS");
  try {
    const Request req = parse(args, env ? std::optional<std::string>(env) : std::nullopt);
    const Report rep = execute(req);
    for (const auto& line : rep.summary) std::cerr << line << "\n";
    std::cout << emit(rep);
    return exit_code(rep);
  } catch (const HelpRequested& h) {
    std::cout << h.text();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    const nlohmann::json out = {{"ok", false}, {"error", {{"code", "UsageError"}, {"message", e.what()}}}};
    std::cout << out.dump(2) << "\n";
    return 2;
  }
}
