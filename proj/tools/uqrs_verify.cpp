#include <exception>
#include <iostream>

#include "uqrs/cli.hpp"

int main(int argc, char** argv) {
  try {
    const auto parsed = uqrs::parse_command_line(argc, argv);
    if (!parsed.ok) {
      (parsed.exit_code == uqrs::kExitPass ? std::cout : std::cerr) << parsed.message;
      return parsed.exit_code;
    }
    const auto result = uqrs::run_batch(parsed.config, &std::cerr);
    if (parsed.config.report_path.empty()) std::cout << result.report;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return uqrs::kExitInternalError;
  }
}
