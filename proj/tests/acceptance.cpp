// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier quench checks run at N = 4 by default; QTI_ACCEPT_FULL=1
// switches criterion 7 to the N = 5 chain.

#include <cstdio>
#include <cstdlib>

int main() {
  std::printf("acceptance suite placeholder\n");
  return 1;
}
