// coxds: Deligne-Simpson decisions, witnesses, and rigidity for Coxeter
// connections.  JSON in, JSON out; every number crosses the interface as an
// exact "p/q" string.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxds/json_io.hpp"

namespace {

using coxds::io::json;

struct IoOptions {
  std::string input;   // file, or empty for stdin
  std::string output;  // file, or empty for stdout
  std::string format = "json";
};

void add_io(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--input", io.input, "Input file (default: standard input)");
  cmd->add_option("--output", io.output, "Output file (default: standard output)");
  cmd->add_option("--format", io.format, "Output format")
      ->check(CLI::IsMember({"json"}));
}

json read_input(const IoOptions& io) {
  std::string text;
  if (io.input.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(io.input);
    if (!f) throw std::invalid_argument("cannot open input file: " + io.input);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

void write_output(const IoOptions& io, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (io.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(io.output);
    if (!f) throw std::invalid_argument("cannot open output file: " + io.output);
    f << text;
  }
}

json dump_instance(const coxds::DSInstance& inst) {
  return {{"formal_type", coxds::io::dump(inst.formal_type)},
          {"orbit", coxds::io::dump(inst.orbit)}};
}

json decide_json(coxds::DSResult res) {
  switch (res) {
    case coxds::DSResult::Yes:
      return {{"result", "yes"}};
    case coxds::DSResult::NoTraceMismatch:
      return {{"result", "no"}, {"reason", "trace-mismatch"}};
    case coxds::DSResult::NoOrbitTooSmall:
      return {{"result", "no"}, {"reason", "orbit-too-small"}};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deligne-Simpson problem for Coxeter connections"};
  app.require_subcommand(1);

  IoOptions io;
  std::uint64_t seed = 0;
  long trunc = 0;
  int cap = coxds::kDefaultEnumerationCap;
  int rig_n = 0, rig_r = 0;
  bool rig_have_orbit = false;

  auto* decide = app.add_subcommand("ds-decide", "Decide a DS instance");
  add_io(decide, io);

  auto* enumerate = app.add_subcommand(
      "ds-enumerate", "List the yes-orbits for a formal type and char poly");
  add_io(enumerate, io);
  enumerate->add_option("--cap", cap, "Enumeration rank cap");

  auto* witness = app.add_subcommand("witness", "Construct a witness connection");
  add_io(witness, io);
  witness->add_option("--seed", seed, "Seed for the completion search");

  auto* verify = app.add_subcommand("verify", "Verify a witness against its instance");
  add_io(verify, io);

  auto* normalize =
      app.add_subcommand("normalize", "Coadjoint normal form of a functional");
  add_io(normalize, io);
  normalize->add_option("--trunc", trunc, "Iwahori truncation window override");

  auto* rigidity = app.add_subcommand("rigidity", "Numerical rigidity criterion");
  add_io(rigidity, io);
  rigidity->add_option("--n", rig_n, "Rank")->required();
  rigidity->add_option("--r", rig_r, "Slope numerator")->required();
  rigidity->add_flag("--orbit-input", rig_have_orbit,
                     "Read the nilpotent orbit from the input instead of using "
                     "the generator orbit");

  auto* poset = app.add_subcommand("orbit-poset", "Orbit poset of a char poly");
  add_io(poset, io);
  poset->add_option("--cap", cap, "Enumeration rank cap");
  int poset_r = 0;
  poset->add_option("--r", poset_r, "Restrict to the filter generated by O^r_q");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) {
      coxds::DSInstance inst = coxds::io::parse_instance(read_input(io));
      write_output(io, decide_json(coxds::ds_decide(inst)));
    } else if (enumerate->parsed()) {
      json in = read_input(io);
      coxds::CoxeterFormalType ft = coxds::io::parse_formal_type(in.at("formal_type"));
      coxds::CharData q = coxds::io::parse_char_data(in.at("q"));
      json orbits = json::array();
      for (const auto& o : coxds::ds_enumerate(ft, q, cap))
        orbits.push_back(coxds::io::dump(o));
      write_output(io, json{{"orbits", orbits}});
    } else if (witness->parsed()) {
      coxds::DSInstance inst = coxds::io::parse_instance(read_input(io));
      coxds::Witness w = coxds::witness_build(inst, seed);
      write_output(io, json{{"instance", dump_instance(inst)},
                            {"witness", coxds::io::dump(w)}});
    } else if (verify->parsed()) {
      json in = read_input(io);
      coxds::DSInstance inst = coxds::io::parse_instance(in.at("instance"));
      coxds::Witness w = coxds::io::parse_witness(in.at("witness"));
      coxds::Verdict v = coxds::witness_verify(w, inst);
      json out = {{"result", v.valid ? "valid" : "invalid"}};
      if (!v.valid) out["reason"] = v.reason;
      write_output(io, out);
    } else if (normalize->parsed()) {
      json in = read_input(io);
      coxds::LaurentMatrix x = coxds::io::parse_laurent_matrix(in.at("x"));
      int r = in.at("r").get<int>();
      auto [nf, g] = coxds::normalize_functional(x, r, x.n, trunc);
      write_output(io, json{{"normal_form", coxds::io::dump(nf, r)},
                            {"gauge", coxds::io::dump(g)}});
    } else if (rigidity->parsed()) {
      coxds::OrbitType orbit =
          rig_have_orbit
              ? coxds::io::parse_orbit(read_input(io))
              : coxds::generator_orbit(rig_r, {{coxds::Rational(0), rig_n}});
      write_output(io, coxds::io::dump(coxds::numerical_criterion(rig_n, rig_r, orbit)));
    } else if (poset->parsed()) {
      coxds::CharData q = coxds::io::parse_char_data(read_input(io).at("q"));
      std::vector<coxds::OrbitType> orbits =
          poset_r > 0 ? coxds::enumerate_filter(poset_r, q, cap)
                      : coxds::enumerate_orbits(q, cap);
      json jorbits = json::array(), relations = json::array();
      for (const auto& o : orbits) jorbits.push_back(coxds::io::dump(o));
      for (size_t i = 0; i < orbits.size(); ++i)
        for (size_t j = 0; j < orbits.size(); ++j) {
          if (i == j) continue;
          if (coxds::closure_compare(orbits[i], orbits[j]) == coxds::Cmp::Less)
            relations.push_back({{"lower", i}, {"upper", j}});
        }
      write_output(io, json{{"orbits", jorbits}, {"relations", relations}});
    }
  } catch (const coxds::limit_error& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
