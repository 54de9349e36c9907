#include "moebius/recursion.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace mg {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

nlohmann::json record_json(int two_g, int n, const LVec& l, const BPoly& value) {
    nlohmann::json j;
    j["v"] = 1;
    j["twoG"] = two_g;
    j["n"] = n;
    j["L"] = l;
    std::vector<std::vector<std::string>> coeffs;
    for (const auto& c : value.coeffs())
        coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    j["coeffs"] = coeffs;
    return j;
}

std::string key_str(int two_g, int n, const LVec& l) {
    std::string s = "(" + std::to_string(two_g) + "," + std::to_string(n) + ";";
    for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

}  // namespace

CountTable::CountTable(std::string disk_path) : path_(std::move(disk_path)) { load(); }

void CountTable::load() {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            std::string sum = j.at("sum").get<std::string>();
            j.erase("sum");
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(fnv1a(j.dump())));
            if (sum != buf) throw std::runtime_error("checksum mismatch");
            if (j.at("v").get<int>() != 1) throw std::runtime_error("version mismatch");
            LVec l = j.at("L").get<LVec>();
            std::vector<Rat> coeffs;
            for (const auto& pair : j.at("coeffs"))
                coeffs.push_back(parse_rat(pair.at(0).get<std::string>()) /
                                 parse_rat(pair.at(1).get<std::string>()));
            mem_[{j.at("twoG").get<int>(), j.at("n").get<int>(), l}] =
                BPoly::from_coeffs(std::move(coeffs));
        } catch (const std::exception& e) {
            corrupt_.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::optional<BPoly> CountTable::lookup(int two_g, int n, const LVec& sorted_l) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = mem_.find({two_g, n, sorted_l});
    if (it == mem_.end()) return std::nullopt;
    return it->second;
}

void CountTable::store(int two_g, int n, const LVec& sorted_l, const BPoly& value) {
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, fresh] = mem_.emplace(Key{two_g, n, sorted_l}, value);
    if (!fresh || path_.empty()) return;
    nlohmann::json j = record_json(two_g, n, sorted_l, value);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
    j["sum"] = buf;
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

size_t CountTable::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return mem_.size();
}

std::vector<std::string> CountTable::list() const {
    std::lock_guard<std::mutex> lk(mu_);
    std::vector<std::string> out;
    for (const auto& [key, value] : mem_) {
        const auto& [tg, n, l] = key;
        out.push_back(key_str(tg, n, l) + " = " + value.str());
    }
    return out;
}

void CountTable::purge() {
    std::lock_guard<std::mutex> lk(mu_);
    mem_.clear();
    corrupt_.clear();
    if (!path_.empty()) std::filesystem::remove(path_);
}

CountTable::VerifyReport CountTable::verify(uint64_t seed) const {
    VerifyReport rep;
    std::vector<std::pair<Key, BPoly>> entries;
    {
        std::lock_guard<std::mutex> lk(mu_);
        rep.total = mem_.size();
        entries.assign(mem_.begin(), mem_.end());
        rep.corrupt_lines = corrupt_;
    }
    size_t want = (entries.size() + 19) / 20;  // 5%, rounded up
    SplitMix rng(seed);
    std::vector<size_t> idx(entries.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.next() % i]);
    for (size_t k = 0; k < want && k < idx.size(); ++k) {
        const auto& [key, stored] = entries[idx[k]];
        const auto& [tg, n, l] = key;
        BPoly fresh = count_recursive(tg, n, l, nullptr);
        ++rep.checked;
        if (fresh != stored) rep.mismatches.push_back(key_str(tg, n, l));
    }
    return rep;
}

BPoly base_case(int two_g, int n, const LVec& L) {
    if (lsum(L) % 2 != 0) return BPoly();
    if (two_g == 0 && n == 3) return BPoly(rat(1, 2));
    if (two_g == 1 && n == 2) {
        long m = std::max(L[0], L[1]);
        return BPoly::b() * rat(m - 1, 4);
    }
    if (two_g == 2 && n == 1) {
        long L1 = L[0];
        BPoly p = (BPoly(1) + BPoly::b()) * Rat(L1 * L1 - 4) +
                  BPoly::b(2) * Rat(5 * L1 * L1 - 12 * L1 + 4);
        return p / Rat(96);
    }
    throw PreconditionError("base_case: not a base topology");
}

namespace {

struct Engine {
    CountTable* table;
    bool symmetric;

    BPoly count(int two_g, int n, LVec L) {
        int chi = two_g - 2 + n;
        if (chi < 1 || two_g < 0 || n < 1)
            throw PreconditionError("count: unstable type (" + std::to_string(two_g) + "," +
                                    std::to_string(n) + ")");
        if (lsum(L) % 2 != 0) return BPoly();
        std::sort(L.begin(), L.end());
        // base topologies have O(1) closed forms; the table is for the rest
        if (chi == 1) return base_case(two_g, n, L);
        if (table) {
            if (auto hit = table->lookup(two_g, n, L)) return *hit;
        }
        BPoly value = symmetric ? eval_symmetric(two_g, n, L) : eval_asymmetric(two_g, n, L);
        if (table) table->store(two_g, n, L, value);
        return value;
    }

    // stability of a factor in the disconnected term
    static bool stable(int two_g, int n) { return n >= 1 && two_g >= 0 && two_g - 2 + n >= 1; }

    BPoly eval_asymmetric(int two_g, int n, const LVec& L) {
        long L1 = L[0];
        LVec rest(L.begin() + 1, L.end());
        BPoly acc;
        const BPoly b = BPoly::b();
        // boundary reduction
        for (int m = 0; m < n - 1; ++m) {
            long Lm = rest[m];
            LVec sub;
            sub.push_back(0);
            for (int k = 0; k < n - 1; ++k)
                if (k != m) sub.push_back(rest[k]);
            for (long p = 2 - ((L1 + Lm) % 2); p < L1 + Lm; p += 2) {
                Rat r = Kernels::R(L1, Lm, p);
                if (r <= 0) throw std::logic_error("R kernel not positive on its support");
                sub[0] = p;
                acc += count(two_g, n - 1, sub) * (Rat(p) * r);
            }
        }
        // cross-cap excision
        if (two_g >= 1) {
            LVec sub;
            sub.push_back(0);
            sub.insert(sub.end(), rest.begin(), rest.end());
            for (long p = 2 - (L1 % 2); p <= L1 - 2; p += 2) {
                sub[0] = p;
                acc += count(two_g - 1, n, sub) * (b * (Rat(p) * Rat(L1 - 1) * Kernels::E(L1, p)));
            }
        }
        // degeneration; enumerate the stable ordered splittings up front
        std::vector<std::pair<int, unsigned>> splits;
        for (int g1 = 0; g1 <= two_g; ++g1)
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                int n1 = 1 + __builtin_popcount(mask), n2 = n - n1 + 1;
                if (stable(g1, n1) && stable(two_g - g1, n2)) splits.push_back({g1, mask});
            }
        if (two_g >= 2 || !splits.empty()) {
            for (long p = 1; p <= L1 - 2; ++p) {
                for (long q = (p % 2 == L1 % 2) ? 2 : 1; p + q <= L1 - 2; q += 2) {
                    BPoly inner;
                    if (two_g >= 2) {
                        LVec sub = {p, q};
                        sub.insert(sub.end(), rest.begin(), rest.end());
                        inner += count(two_g - 2, n + 1, sub) * ((BPoly(1) + b) / Rat(2));
                    }
                    for (auto [g1, mask] : splits) {
                        LVec i1 = {p}, i2 = {q};
                        long s1 = p, s2 = q;
                        for (int k = 0; k < n - 1; ++k) {
                            if (mask & (1u << k)) {
                                i1.push_back(rest[k]);
                                s1 += rest[k];
                            } else {
                                i2.push_back(rest[k]);
                                s2 += rest[k];
                            }
                        }
                        if (s1 % 2 != 0 || s2 % 2 != 0) continue;
                        inner += count(g1, static_cast<int>(i1.size()), i1) *
                                 count(two_g - g1, static_cast<int>(i2.size()), i2);
                    }
                    if (!inner.is_zero()) acc += inner * (Rat(p) * Rat(q) * Kernels::D(L1, p, q));
                }
            }
        }
        return acc;
    }

    BPoly eval_symmetric(int two_g, int n, const LVec& L) {
        BPoly acc;
        const BPoly b = BPoly::b();
        for (int i = 0; i < n; ++i) {
            long Li = L[i];
            // ordered pairs (i, j)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                long Lj = L[j];
                LVec sub;
                sub.push_back(0);
                for (int k = 0; k < n; ++k)
                    if (k != i && k != j) sub.push_back(L[k]);
                for (long p = 2 - ((Li + Lj) % 2); p < Li + Lj; p += 2) {
                    sub[0] = p;
                    acc += count(two_g, n - 1, sub) * (Rat(p) * Rat(Li + Lj - p));
                }
            }
            LVec rest;
            for (int k = 0; k < n; ++k)
                if (k != i) rest.push_back(L[k]);
            if (two_g >= 1) {
                LVec sub;
                sub.push_back(0);
                sub.insert(sub.end(), rest.begin(), rest.end());
                for (long p = 2 - (Li % 2); p <= Li - 2; p += 2) {
                    sub[0] = p;
                    acc += count(two_g - 1, n, sub) * (b * (Rat(p) * Rat(Li - 1) * Rat(Li - p)));
                }
            }
            std::vector<std::pair<int, unsigned>> splits;
            for (int g1 = 0; g1 <= two_g; ++g1)
                for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                    int n1 = 1 + __builtin_popcount(mask), n2 = n - n1 + 1;
                    if (stable(g1, n1) && stable(two_g - g1, n2)) splits.push_back({g1, mask});
                }
            if (two_g < 2 && splits.empty()) continue;
            for (long p = 1; p <= Li - 2; ++p) {
                for (long q = (p % 2 == Li % 2) ? 2 : 1; p + q <= Li - 2; q += 2) {
                    BPoly inner;
                    if (two_g >= 2) {
                        LVec sub = {p, q};
                        sub.insert(sub.end(), rest.begin(), rest.end());
                        inner += count(two_g - 2, n + 1, sub) * (BPoly(1) + b);
                    }
                    for (auto [g1, mask] : splits) {
                        LVec i1 = {p}, i2 = {q};
                        long s1 = p, s2 = q;
                        for (int k = 0; k < n - 1; ++k) {
                            if (mask & (1u << k)) {
                                i1.push_back(rest[k]);
                                s1 += rest[k];
                            } else {
                                i2.push_back(rest[k]);
                                s2 += rest[k];
                            }
                        }
                        if (s1 % 2 != 0 || s2 % 2 != 0) continue;
                        inner += count(g1, static_cast<int>(i1.size()), i1) *
                                 count(two_g - g1, static_cast<int>(i2.size()), i2) * Rat(2);
                    }
                    if (!inner.is_zero()) acc += inner * (Rat(p) * Rat(q) * Rat(Li - p - q));
                }
            }
        }
        return acc / Rat(2 * lsum(L));
    }
};

}  // namespace

BPoly count_recursive(int two_g, int n, const LVec& L, CountTable* table) {
    Engine e{table, false};
    return e.count(two_g, n, L);
}

BPoly count_recursive_symmetric(int two_g, int n, const LVec& L, CountTable* table) {
    Engine e{table, true};
    return e.count(two_g, n, L);
}

}  // namespace mg
