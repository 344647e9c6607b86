// Times the serial reference kernels against their OpenMP counterparts.

#include <bnov/bloch.hpp>
#include <bnov/scan.hpp>
#include <bnov/wave.hpp>

#include <chrono>
#include <cstdio>
#include <vector>

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <class F>
double time_call(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds_since(t0);
}

}  // namespace

int main() {
  std::printf("workers: %d\n\n", bnov::worker_count());

  {
    bnov::RegionScanConfig cfg;
    cfg.nk = 600;
    cfg.nb = 600;
    std::vector<bnov::RegionRow> serial, parallel;
    const double ts = time_call([&] { serial = bnov::region_scan_serial(cfg); });
    const double tp = time_call([&] { parallel = bnov::region_scan(cfg); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = serial[i].g == parallel[i].g &&
             serial[i].verdict == parallel[i].verdict;
    }
    std::printf("region scan %dx%d   serial %8.4fs   parallel %8.4fs   "
                "speedup %5.2fx   bitwise %s\n",
                cfg.nk, cfg.nb, ts, tp, ts / tp, same ? "equal" : "DIFFER");
  }

  {
    const bnov::ModelParams p{2.0, 2.5, 1.0};
    const bnov::FourierWave wave = bnov::newton_refine(p, 0.05, 32);
    std::vector<double> xis;
    for (int i = 1; i <= 24; ++i) xis.push_back(0.5 * i / 24.0);
    std::vector<bnov::BlochSample> serial, parallel;
    const double ts =
        time_call([&] { serial = bnov::sweep_xi_serial(wave, xis, 48); });
    const double tp = time_call([&] { parallel = bnov::sweep_xi(wave, xis, 48); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = serial[i].max_real_part == parallel[i].max_real_part &&
             serial[i].eigenvalues == parallel[i].eigenvalues;
    }
    std::printf("bloch sweep 24 x N=48   serial %8.4fs   parallel %8.4fs   "
                "speedup %5.2fx   bitwise %s\n",
                ts, tp, ts / tp, same ? "equal" : "DIFFER");
  }
  return 0;
}
