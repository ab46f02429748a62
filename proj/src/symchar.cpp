#include "csnet/symchar.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "csnet/error.hpp"

namespace csnet {

Partition::Partition(std::vector<int> p) {
    for (int x : p)
        if (x < 0) throw Error(ErrorKind::OutOfRange, "partition parts must be nonnegative");
    std::erase(p, 0);
    std::sort(p.begin(), p.end(), std::greater<>());
    parts = std::move(p);
}

int Partition::size() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    Partition c;
    if (parts.empty()) return c;
    for (int j = 1; j <= parts.front(); ++j)
        c.parts.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [j](int x) { return x >= j; })));
    return c;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0 || n > 20) throw Error(ErrorKind::OutOfRange, "partitions_of: n must be in 0..20, got " + std::to_string(n));
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

std::vector<int> to_partition(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int part = beta[i] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

// mu is weakly decreasing; its largest part is stripped first.
std::int64_t mn_rule(const std::vector<int>& lambda, const std::vector<int>& mu, Memo& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    const int m = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - m;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++jumped;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::int64_t sub = mn_rule(to_partition(std::move(moved)), rest, memo);
        total += (jumped % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw Error(ErrorKind::ShapeError, "character: |lambda| = " + std::to_string(lambda.size()) +
                                               " but |mu| = " + std::to_string(mu.size()));
    Memo memo;
    return mn_rule(lambda.parts, mu.parts, memo);
}

std::int64_t degree(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    Integer hooks = 1, fact = 1;
    for (int i = 2; i <= lambda.size(); ++i) fact *= i;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) {
            int arm = lambda.parts[i] - j - 1;
            int leg = conj.parts[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    Integer d = fact / hooks;
    return d.get_si();
}

Partition cycle_type(const std::vector<int>& images) {
    const std::size_t n = images.size();
    std::vector<bool> hit(n, false);
    for (int x : images) {
        if (x < 1 || static_cast<std::size_t>(x) > n || hit[static_cast<std::size_t>(x - 1)])
            throw Error(ErrorKind::NotAPermutation, "image list is not a bijection on 1.." + std::to_string(n));
        hit[static_cast<std::size_t>(x - 1)] = true;
    }
    std::vector<bool> seen(n, false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

int sign(const Partition& mu) { return (mu.size() - static_cast<int>(mu.length())) % 2 ? -1 : 1; }

Integer centralizer_order(const Partition& mu) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    for (auto [part, m] : mult)
        for (int k = 1; k <= m; ++k) z *= Integer(part) * k;
    return z;
}

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
    values_.resize(parts_.size() * parts_.size());
    Memo memo;
    for (std::size_t l = 0; l < parts_.size(); ++l)
        for (std::size_t m = 0; m < parts_.size(); ++m)
            values_[l * parts_.size() + m] = mn_rule(parts_[l].parts, parts_[m].parts, memo);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw Error(ErrorKind::ShapeError, p.to_string() + " is not a partition of " + std::to_string(n_));
    return it->second;
}

const CharacterTable& character_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const CharacterTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const CharacterTable>(n);
    return *slot;
}

nlohmann::json to_json(const Partition& p) { return p.parts; }

nlohmann::json to_json(const CharacterTable& t) {
    nlohmann::json j;
    j["n"] = t.n();
    j["classes"] = nlohmann::json::array();
    for (const auto& p : t.partitions()) j["classes"].push_back(to_json(p));
    j["chars"] = nlohmann::json::array();
    for (std::size_t l = 0; l < t.partitions().size(); ++l) {
        std::vector<std::int64_t> row;
        for (std::size_t m = 0; m < t.partitions().size(); ++m) row.push_back(t.value(l, m));
        j["chars"].push_back({{"lambda", to_json(t.partitions()[l])}, {"values", row}});
    }
    return j;
}

} // namespace csnet
