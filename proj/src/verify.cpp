#include "mosaic/verify.hpp"

#include <algorithm>

#include "mosaic/bounds.hpp"
#include "mosaic/transfer.hpp"

namespace mosaic {

namespace {

std::string dims(int m, int n) {
    return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyLimits& limits, const ProfileWeights& weights) {
    std::vector<CheckResult> out;
    auto frontier = [&](int m, int n) { return count_frontier(m, n, weights); };

    {  // one-row and two-row strips have closed-form counts
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= limits.max_n && ok; ++n) {
            if (limits.max_m >= 1) {
                BigInt f = frontier(1, n);
                if (f != 1) {
                    ok = false;
                    detail = dims(1, n) + ": frontier=" + f.get_str() + " closed-form=1";
                }
            }
            if (ok && limits.max_m >= 2) {
                BigInt f = frontier(2, n);
                BigInt e = BigInt(1) << (n - 1);
                if (f != e) {
                    ok = false;
                    detail = dims(2, n) + ": frontier=" + f.get_str() + " closed-form=" + e.get_str();
                }
            }
        }
        out.push_back({"closed-form strip counts", ok, detail});
    }

    {  // exhaustive backtracking agrees with the frontier DP on small grids
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= limits.max_m && ok; ++m)
            for (int n = 1; n <= limits.max_n && ok; ++n) {
                if (long(m) * n > limits.exhaustive_area || long(m) * n > kBacktrackAreaLimit)
                    continue;
                BigInt b = count_backtrack(m, n), f = frontier(m, n);
                if (b != f) {
                    ok = false;
                    detail = dims(m, n) + ": backtrack=" + b.get_str() + " frontier=" + f.get_str();
                }
            }
        out.push_back({"backtrack vs frontier", ok, detail});
    }

    {  // transfer matrices agree with the frontier DP
        bool ok = true;
        std::string detail;
        for (int m = 3; m <= limits.max_m && ok; ++m)
            for (int n = 2; n <= limits.max_n && ok; ++n) {
                BigInt t = count_transfer(m, n), f = frontier(m, n);
                if (t != f) {
                    ok = false;
                    detail = dims(m, n) + ": transfer=" + t.get_str() + " frontier=" + f.get_str();
                }
            }
        out.push_back({"transfer vs frontier", ok, detail});
    }

    {  // counts are transpose-symmetric
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= limits.max_m && ok; ++m)
            for (int n = m + 1; n <= limits.max_n && ok; ++n) {
                if (m > kFrontierColsLimit || n > kFrontierColsLimit) continue;
                BigInt a = frontier(m, n), b = frontier(n, m);
                if (a != b) {
                    ok = false;
                    detail = dims(m, n) + "=" + a.get_str() + " but " + dims(n, m) + "=" +
                             b.get_str();
                }
            }
        out.push_back({"transpose symmetry", ok, detail});
    }

    {  // counts are even once both sides are >= 2 (mirror pairs)
        bool ok = true;
        std::string detail;
        for (int m = 2; m <= limits.max_m && ok; ++m)
            for (int n = 2; n <= limits.max_n && ok; ++n) {
                BigInt f = frontier(m, n);
                if (f % 2 != 0) {
                    ok = false;
                    detail = dims(m, n) + "=" + f.get_str() + " is odd";
                }
            }
        out.push_back({"evenness", ok, detail});
    }

    {  // gluing strips side by side injects pairs into the wider strip
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= limits.max_m && ok; ++m)
            for (int n1 = 1; n1 <= limits.max_n && ok; ++n1)
                for (int n2 = n1; n1 + n2 <= limits.max_n && ok; ++n2) {
                    BigInt whole = frontier(m, n1 + n2);
                    BigInt parts = frontier(m, n1) * frontier(m, n2);
                    if (whole < parts) {
                        ok = false;
                        detail = dims(m, n1 + n2) + "=" + whole.get_str() + " < " + dims(m, n1) +
                                 "*" + dims(m, n2) + "=" + parts.get_str();
                    }
                }
        out.push_back({"supermultiplicativity", ok, detail});
    }

    {  // bound families sandwich the square counts
        bool ok = true;
        std::string detail;
        const int top = std::min(limits.max_m, limits.max_n);
        for (int n = 3; n <= top && ok; ++n) {
            BigInt d = frontier(n, n);
            BigInt lo = lower_bound_count(n), hi = upper_bound_count(n);
            RationalBounds h = hllo_bounds(n);
            Rational dq(d);
            if (d < lo || d > hi)
                detail = "D_" + std::to_string(n) + "=" + d.get_str() + " outside [" +
                         lo.get_str() + ", " + hi.get_str() + "]";
            else if (dq < h.lo || dq > h.hi)
                detail = "D_" + std::to_string(n) + "=" + d.get_str() + " outside rational [" +
                         h.lo.get_str() + ", " + h.hi.get_str() + "]";
            ok = detail.empty();
        }
        out.push_back({"bound sandwich", ok, detail});
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace mosaic
