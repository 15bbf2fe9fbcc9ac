// Copyright 2026 The toric-classify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// toric: command-line front end over the C API.

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "toric/toric.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct Invocation {
  std::string command;
  std::string target;
  std::string path;
  int degree = -1;
  std::string coeff = "Z";
  std::string property;
  bool json = false;
  unsigned jobs = 1;
};

struct Output {
  int exit_code = kExitInternal;
  std::string text;
  std::string json;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

Output run_file(const Invocation& inv, const fs::path& path) {
  Output out;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    out.exit_code = kExitInvalid;
    out.text = "error: " + path.string() + ": cannot read file\n";
    out.json = "{\"schema_version\":1,\"source\":\"" + json_escape(path.string()) +
               "\",\"status\":\"invalid\",\"exit_code\":2,\"error\":{\"code\":\"io\",\"message\":\"cannot read file\"}}";
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string source = buf.str();

  toric_run_options opt{};
  opt.command = inv.command.c_str();
  opt.target = inv.target.empty() ? nullptr : inv.target.c_str();
  opt.degree = inv.degree;
  opt.coeff = inv.coeff.c_str();
  opt.property = inv.property.empty() ? nullptr : inv.property.c_str();

  toric_report* report = nullptr;
  const std::string name = path.string();
  if (toric_run(&opt, source.data(), source.size(), name.c_str(), &report) != TORIC_OK) {
    out.text = std::string("internal error: ") + toric_last_error() + "\n";
    out.json = "{\"status\":\"internal-error\",\"exit_code\":3}";
    return out;
  }
  out.exit_code = toric_report_exit_code(report);
  out.text = toric_report_text(report);
  out.json = toric_report_json(report);
  toric_report_free(report);
  return out;
}

bool use_color() {
  const char* env = std::getenv("TORIC_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "never") return false;
  return isatty(STDOUT_FILENO) != 0;
}

// Colors the first line of a text report by exit code.
std::string colorize(const std::string& text, int exit_code) {
  const char* code = exit_code == 0 ? "\033[32m" : exit_code == 1 ? "\033[33m" : "\033[31m";
  const auto nl = text.find('\n');
  return code + text.substr(0, nl) + "\033[0m" + (nl == std::string::npos ? "" : text.substr(nl));
}

int execute(const Invocation& inv) {
  const char* env = std::getenv("TORIC_COLOR");
  if (env && std::string(env) != "auto" && std::string(env) != "never") {
    std::cerr << "error: TORIC_COLOR must be 'auto' or 'never'\n";
    return kExitInvalid;
  }
  const bool color = !inv.json && use_color();

  std::error_code ec;
  if (!fs::is_directory(inv.path, ec)) {
    const Output o = run_file(inv, inv.path);
    if (inv.json) {
      std::cout << o.json << '\n';
    } else {
      (o.exit_code >= kExitInvalid ? std::cerr : std::cout) << (color ? colorize(o.text, o.exit_code) : o.text);
    }
    return o.exit_code;
  }

  // Batch: every *.json file in the directory, sorted by name.
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(inv.path, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    std::cerr << "error: " << inv.path << ": " << ec.message() << '\n';
    return kExitInvalid;
  }
  std::sort(files.begin(), files.end());
  std::vector<Output> outputs(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) outputs[i] = run_file(inv, files[i]);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(inv.jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int worst = 0;
  if (inv.json) std::cout << "[";
  for (std::size_t i = 0; i < files.size(); ++i) {
    worst = std::max(worst, outputs[i].exit_code);
    if (inv.json) {
      std::cout << (i ? "," : "") << outputs[i].json;
    } else {
      std::cout << "== " << files[i].filename().string() << " (exit " << outputs[i].exit_code << ")\n"
                << (color ? colorize(outputs[i].text, outputs[i].exit_code) : outputs[i].text);
    }
  }
  if (inv.json) std::cout << "]\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and classification for toric moment data"};
  app.set_version_flag("--version", std::string(toric_version()));
  app.require_subcommand(1);

  Invocation inv;
  app.add_flag("--json", inv.json, "Print the machine-readable report");
  app.add_option("--jobs,-j", inv.jobs, "Worker threads for directory input")->check(CLI::Range(1u, 256u));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", inv.path, "Input document, or a directory of *.json documents")->required();
    sub->add_flag("--json", inv.json, "Print the machine-readable report");
    sub->add_option("--jobs,-j", inv.jobs, "Worker threads for directory input")->check(CLI::Range(1u, 256u));
  };

  auto* snf = app.add_subcommand("snf", "Smith and Hermite normal forms of a matrix or tuple");
  add_input(snf);

  auto* check = app.add_subcommand("check", "Check a structural property");
  check->require_subcommand(1);
  struct CheckSpec {
    const char* name;
    const char* help;
    const char* properties;
  };
  for (const CheckSpec& c : {CheckSpec{"unimodular", "Is the tuple a basis of a subtorus lattice?", nullptr},
                             CheckSpec{"cone", "Unimodular cone: validity, homogeneity, splitting",
                                       "unimodular|homogeneous"},
                             CheckSpec{"good-cone", "Good-cone condition with per-face audit", nullptr},
                             CheckSpec{"polytope", "Delzant / compact stratified audits", "delzant|bgl|simple"}}) {
    auto* sub = check->add_subcommand(c.name, c.help);
    add_input(sub);
    if (c.properties) sub->add_option("--property", inv.property, std::string("One of ") + c.properties);
    sub->callback([&inv, name = std::string(c.name)] { inv.target = name; });
  }

  auto* coh = app.add_subcommand("cohomology", "Simplicial cohomology of a complex");
  add_input(coh);
  coh->add_option("--degree,-k", inv.degree, "Degree (all degrees when omitted)")->check(CLI::Range(0, 64));
  coh->add_option("--coeff", inv.coeff, "Z, Q or lattice:n");

  auto* rel = app.add_subcommand("relative", "Relative cohomology of a pair and its long exact sequence");
  add_input(rel);
  rel->add_option("--degree,-k", inv.degree, "Degree")->required()->check(CLI::Range(0, 64));

  auto* cls = app.add_subcommand("classify", "Classifying set of a toric space over its orbital moment map");
  add_input(cls);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  for (auto* sub : app.get_subcommands()) inv.command = sub->get_name();
  return execute(inv);
}
