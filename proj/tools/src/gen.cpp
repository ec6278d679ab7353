#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "relaxfeas/errors.hpp"
#include "relaxfeas/generators.hpp"
#include "relaxfeas/instance_io.hpp"

namespace relaxfeas::cli {

int run_gen(const GenOptions& opt) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(opt.out)) {
    throw Error(ErrorCode::IoError, "output directory " + opt.out + " does not exist");
  }
  if (opt.count < 1) throw UsageError("--count must be >= 1");
  for (int i = 0; i < opt.count; ++i) {
    Instance inst;
    if (opt.family == "random01") {
      if (opt.n < 2) throw UsageError("--n must be >= 2");
      inst = gen_random01(opt.n, opt.seed + static_cast<std::uint64_t>(i));
    } else {
      if (opt.alpha < 1) throw UsageError("--alpha must be >= 1");
      inst = gen_wedge(opt.alpha + i);
    }
    const fs::path path = fs::path(opt.out) / (inst.name + "." + opt.format);
    write_instance(inst, path);
    std::cout << path.string() << '\n';
  }
  return kFeasible;
}

}  // namespace relaxfeas::cli
