#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace circleop {

/// Error taxonomy shared by the library and the CLI.
/// The CLI maps these to exit codes: validation -> 1, resolution -> 2,
/// ill_conditioned and contract -> 3.
enum class errc {
  validation,       // bad arguments or violated preconditions
  resolution,       // the grid/degree cannot resolve the requested quantity
  ill_conditioned,  // the data sits too close to a singular configuration
  contract,         // a numerical contract the module promises was violated
};

class error : public std::runtime_error {
public:
  error(errc code, std::string module, const std::string& what)
      : std::runtime_error("[" + module + "] " + what),
        code_(code),
        module_(std::move(module)) {}

  errc code() const noexcept { return code_; }
  const std::string& module_name() const noexcept { return module_; }

private:
  errc code_;
  std::string module_;
};

struct validation_error : error {
  validation_error(std::string module, const std::string& what)
      : error(errc::validation, std::move(module), what) {}
};

struct resolution_error : error {
  resolution_error(std::string module, const std::string& what)
      : error(errc::resolution, std::move(module), what) {}
};

struct ill_conditioned_error : error {
  ill_conditioned_error(std::string module, const std::string& what)
      : error(errc::ill_conditioned, std::move(module), what) {}
};

struct contract_error : error {
  contract_error(std::string module, const std::string& what)
      : error(errc::contract, std::move(module), what) {}
};

}  // namespace circleop
