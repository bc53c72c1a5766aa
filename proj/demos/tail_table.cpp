// Prints the largest point-set size the probabilistic argument rules out at
// each n, together with the failure probability it leaves on the table, then
// shows one instance of the estimate chain behind that tail.

#include <iomanip>
#include <iostream>

#include <upset/upset.hpp>

int main() {
  using namespace upset;

  std::cout << std::setw(6) << "n" << std::setw(12) << "m_max"
            << std::setw(14) << "tail" << std::setw(14) << "log10(tail)"
            << '\n';
  for (const int n : {24, 48, 120, 131, 240, 480, 1200, 1305, 4800, 12000}) {
    const TheoremThreshold t = theorem_threshold(n);
    std::cout << std::setw(6) << n << std::setw(12) << t.m_max
              << std::setw(14) << std::scientific << std::setprecision(2)
              << t.tail << std::setw(14) << std::fixed
              << std::setprecision(2) << t.tail_log10
              << (t.boundary_flag ? "  (boundary)" : "") << '\n';
  }

  const std::int64_t m = 100;
  const int ell = 55;
  const StirlingChain chain = stirling_chain(m, ell);
  std::cout << "\nestimate chain at m=" << m << ", ell=" << ell
            << " (threshold 2e*sqrt(m) = " << std::fixed
            << std::setprecision(2)
            << chain.ell_threshold.convert_to<double>() << "):\n";
  for (const ChainStep& step : chain.steps)
    std::cout << "  " << std::setw(16) << step.label << "  log10 = "
              << std::setprecision(3)
              << boost::multiprecision::log10(step.value).convert_to<double>()
              << '\n';
  std::cout << "monotone: " << (chain.monotone ? "yes" : "no")
            << ", precondition ell >= 2e*sqrt(m): "
            << (chain.precondition_met ? "met" : "not met") << '\n';
  return 0;
}
