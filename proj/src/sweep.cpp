/*
 * Copyright 2026 The hitchin-exact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hitchin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

namespace hx {

void SweepBox::validate() const {
    require(!groups.empty(), "no groups selected");
    require(!m.empty() && !g.empty() && !n.empty(), "empty parameter range");
    require(m.lo >= 1, "m must be at least 1");
    require(g.lo >= 2, "g must be at least 2");
    require(n.lo >= 1, "n must be at least 1");
}

std::vector<DimensionReport> sweep_dimensions(const SweepBox& box, unsigned threads) {
    box.validate();
    struct Task {
        GroupKind kind;
        i64 m, g, n;
    };
    std::vector<Task> tasks;
    for (auto kind : box.groups)
        for (i64 m = box.m.lo; m <= box.m.hi; ++m)
            for (i64 g = box.g.lo; g <= box.g.hi; ++g)
                for (i64 n = box.n.lo; n <= box.n.hi; ++n) tasks.push_back({kind, m, g, n});
    // Validate up front so worker threads never throw.
    for (const auto& t : tasks) CurveParams{t.g, t.n, box.degM}.validate_for(GroupSpec::make(t.kind, static_cast<int>(t.m)));

    std::vector<DimensionReport> out(tasks.size());
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto& t = tasks[i];
            out[i] = identity_suite(GroupSpec::make(t.kind, static_cast<int>(t.m)), CurveParams{t.g, t.n, box.degM});
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::sort(out.begin(), out.end(), [](const DimensionReport& a, const DimensionReport& b) {
        return std::tuple(static_cast<int>(a.group.kind), a.group.m, a.g, a.n) <
               std::tuple(static_cast<int>(b.group.kind), b.group.m, b.g, b.n);
    });
    return out;
}

AuxiliarySweep sweep_auxiliary(const SweepBox& box) {
    box.validate();
    AuxiliarySweep aux;
    const i64 r_max = 2 * box.m.hi + 2;
    std::size_t genus_checked = 0;
    std::size_t genus_failed = 0;
    std::size_t recon_checked = 0;
    std::size_t recon_failed = 0;
    std::size_t parity_checked = 0;
    std::size_t parity_failed = 0;
    Json pfaffian = Json::array();
    bool pfaffian_ok = true;
    for (i64 g = box.g.lo; g <= box.g.hi; ++g)
        for (i64 n = box.n.lo; n <= box.n.hi; ++n) {
            const CurveParams p{g, n, box.degM};
            for (i64 r = 1; r <= r_max; ++r) {
                ++genus_checked;
                if (spectral_genus(r, p) != rh_genus_crosscheck(r, p)) ++genus_failed;
                if (r % 2 == 1 && box.degM % 2 != 0) continue;
                ++recon_checked;
                if (!eigenline_reconciliation(r, p).pass) ++recon_failed;
                ++parity_checked;
                if (!sqrt_parity_check(r, p)) ++parity_failed;
            }
            for (i64 m = box.m.lo; m <= box.m.hi; ++m) {
                const auto rep = pfaffian_convention_report(m, p);
                pfaffian.push_back(to_json(rep));
                pfaffian_ok = pfaffian_ok && rep.pass;
            }
        }
    aux.pass = genus_failed == 0 && recon_failed == 0 && parity_failed == 0 && pfaffian_ok;
    aux.report = Json{{"genus_crosscheck", {{"checked", genus_checked}, {"failed", genus_failed}}},
                      {"eigenline_reconciliation", {{"checked", recon_checked}, {"failed", recon_failed}}},
                      {"sqrt_parity", {{"checked", parity_checked}, {"failed", parity_failed}}},
                      {"pfaffian_convention", std::move(pfaffian)},
                      {"verdict", aux.pass ? "PASS" : "FAIL"}};
    return aux;
}

}  // namespace hx
