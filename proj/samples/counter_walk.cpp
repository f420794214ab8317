// Walks the width-3 counter, prints each term with its decoded value, the
// matching word trace, and the orbit summary of the 8-neuron net.

#include <iostream>

#include "bsnet/counter_seq.hpp"
#include "bsnet/dynamics.hpp"
#include "bsnet/threshold_net.hpp"
#include "bsnet/trace_io.hpp"

int main() {
  using namespace bsnet;

  std::cout << "counter terms (width 3):\n";
  bs_code code = u_initial(3);
  for (int j = 0; j <= 8; ++j) {
    std::cout << "  u(" << j << ") = " << to_pair_string(code)
              << "  value " << code_value(code) << '\n';
    code = u_next(code);
  }

  const net_with_state built = build_theorem1_net(3);
  const auto step = [&](const configuration& c) {
    return mcp_step(built.net, c);
  };

  std::cout << "\nnet trace:\n"
            << format_trace(iterate_map(step, built.init, 9),
                            trace_style::table2);

  const auto orbit = detect_orbit(
      step, built.init, 1 << 10,
      [](const configuration& c) { return c.packed(); });
  std::cout << "\norbit: "
            << orbit_json(orbit.transient, orbit.cycle, orbit.steps,
                          built.net.size())
                   .dump()
            << '\n';
  return 0;
}
