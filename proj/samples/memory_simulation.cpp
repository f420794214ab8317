// Builds the depth-2 memory net that replays the size-14 counter net, runs a
// few epochs of both, and prints the interleaved states.

#include <iostream>

#include "bsnet/memory_net.hpp"
#include "bsnet/trace_io.hpp"

int main() {
  using namespace bsnet;

  const std::size_t n = 3, k = 2;
  const configuration x0 = counter_initial_state(n * k);
  const net_with_state fast = build_family_net(n, k, counter_params(), x0);
  const memory_net slow = build_simulating_net(n, k, counter_params());
  memory_window window = build_initial_memory(n, k, x0);

  configuration x = fast.init;
  for (std::size_t t = 0; t <= 4; ++t) {
    std::cout << "epoch " << t << "  fast " << trace_line(x) << '\n';
    for (std::size_t i = 0; i < k; ++i)
      std::cout << "         y(" << (t * k + i) << ")  "
                << trace_line(window.at_offset(i)) << '\n';
    x = mcp_step(fast.net, x);
    for (std::size_t i = 0; i < k; ++i)
      window.push(caianiello_step(slow, window));
  }

  const alignment_report report =
      alignment_check(n, k, counter_params(), x0, 300);
  std::cout << (report.ok ? "alignment ok" : "alignment broken") << " over "
            << report.horizon << " epochs\n";
  return report.ok ? 0 : 1;
}
