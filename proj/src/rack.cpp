#include "quandlekit/rack.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace quandlekit {

ValidationReport validate_table(const std::vector<std::vector<int>>& table) {
    ValidationReport r;
    const int n = static_cast<int>(table.size());
    if (n == 0) {
        r.structural_ok = false;
        r.structural_error = "empty table";
        return r;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) {
            r.structural_ok = false;
            r.structural_error = "row " + std::to_string(a) + " has " +
                                 std::to_string(table[a].size()) + " entries, expected " +
                                 std::to_string(n);
            return r;
        }
        for (int b = 0; b < n; ++b) {
            if (table[a][b] < 0 || table[a][b] >= n) {
                r.structural_ok = false;
                r.structural_error = "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") = " + std::to_string(table[a][b]) + " out of range";
                return r;
            }
        }
    }
    for (int a = 0; a < n && !r.self_distributive_fail; ++a)
        for (int b = 0; b < n && !r.self_distributive_fail; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[table[a][c]][table[b][c]]) {
                    r.self_distributive_fail = {a, b, c};
                    break;
                }
    for (int b = 0; b < n && !r.invertible_fail; ++b) {
        std::vector<int> seen(n, -1);
        for (int a = 0; a < n; ++a) {
            if (seen[table[a][b]] >= 0) {
                r.invertible_fail = {seen[table[a][b]], a, b};
                break;
            }
            seen[table[a][b]] = a;
        }
    }
    for (int a = 0; a < n; ++a)
        if (table[a][a] != a) {
            r.idempotent_fail = a;
            break;
        }
    return r;
}

Rack::Rack(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    ValidationReport r = validate_table(table_);
    if (!r.structural_ok) throw std::invalid_argument("bad table: " + r.structural_error);
    if (!r.is_rack()) throw std::invalid_argument("table is not a rack");
    n_ = static_cast<int>(table_.size());
    quandle_ = !r.idempotent_fail.has_value();
    inv_.assign(n_, std::vector<int>(n_, 0));
    for (int b = 0; b < n_; ++b)
        for (int a = 0; a < n_; ++a) inv_[table_[a][b]][b] = a;
}

Rack cyclic_rack(int n) {
    if (n < 1) throw std::invalid_argument("cyclic rack needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + 1) % n;
    return Rack(std::move(t));
}

Rack trivial_quandle(int n) {
    if (n < 1) throw std::invalid_argument("trivial quandle needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = i;
    return Rack(std::move(t));
}

Rack dihedral_quandle(int n) {
    if (n < 1) throw std::invalid_argument("dihedral quandle needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((2 * j - i) % n + n) % n;
    return Rack(std::move(t));
}

Rack alexander_quandle(int n, int t) {
    if (n < 1) throw std::invalid_argument("alexander quandle needs n >= 1");
    int tm = ((t % n) + n) % n;
    if (std::gcd(tm, n) != 1)
        throw std::invalid_argument("alexander quandle needs gcd(t,n)=1, got t=" +
                                    std::to_string(t) + ", n=" + std::to_string(n));
    std::vector<std::vector<int>> tab(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            tab[a][b] = static_cast<int>((static_cast<long long>(tm) * a +
                                          static_cast<long long>(1 - tm + n) * b) % n);
    return Rack(std::move(tab));
}

OrbitPartition inner_orbits(const Rack& x) {
    const int n = x.size();
    std::vector<std::vector<int>> gens;
    for (int b = 0; b < n; ++b) {
        std::vector<int> p(n);
        for (int a = 0; a < n; ++a) p[a] = x.op(a, b);
        gens.push_back(std::move(p));
    }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                std::vector<int> prod(n);
                for (int a = 0; a < n; ++a) prod[a] = h[g[a]];
                if (group.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) parent[find(a)] = find(x.op(a, b));
    std::map<int, std::vector<int>> blocks;
    for (int a = 0; a < n; ++a) blocks[find(a)].push_back(a);
    OrbitPartition out;
    out.group_order = static_cast<long long>(group.size());
    for (auto& [root, blk] : blocks) out.blocks.push_back(std::move(blk));
    return out;
}

bool is_connected(const Rack& x) { return inner_orbits(x).blocks.size() == 1; }

bool is_faithful(const Rack& x) {
    const int n = x.size();
    std::set<std::vector<int>> cols;
    for (int b = 0; b < n; ++b) {
        std::vector<int> col(n);
        for (int a = 0; a < n; ++a) col[a] = x.op(a, b);
        cols.insert(std::move(col));
    }
    return static_cast<int>(cols.size()) == n;
}

namespace {

// DFS for an automorphism extending sigma; next unassigned element gets tried.
bool extend_automorphism(const Rack& x, std::vector<int>& sigma, std::vector<bool>& used, int k) {
    const int n = x.size();
    if (k == n) return true;
    if (sigma[k] >= 0) return extend_automorphism(x, sigma, used, k + 1);
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        sigma[k] = v;
        used[v] = true;
        bool ok = true;
        for (int j = 0; j <= k && ok; ++j) {
            if (sigma[j] < 0) continue;
            int ab = x.op(k, j), ba = x.op(j, k);
            if (sigma[ab] >= 0 && sigma[ab] != x.op(v, sigma[j])) ok = false;
            if (ok && sigma[ba] >= 0 && sigma[ba] != x.op(sigma[j], v)) ok = false;
        }
        if (ok && extend_automorphism(x, sigma, used, k + 1)) return true;
        sigma[k] = -1;
        used[v] = false;
    }
    return false;
}

bool automorphism_moving(const Rack& x, int from, int to) {
    std::vector<int> sigma(x.size(), -1);
    std::vector<bool> used(x.size(), false);
    sigma[from] = to;
    used[to] = true;
    return extend_automorphism(x, sigma, used, 0);
}

}  // namespace

HomogeneityResult is_homogeneous(const Rack& x, int bound) {
    HomogeneityResult r;
    r.bound = bound;
    if (x.size() > bound) return r;
    r.known = true;
    r.homogeneous = true;
    for (int t = 1; t < x.size(); ++t)
        if (!automorphism_moving(x, 0, t)) {
            r.homogeneous = false;
            break;
        }
    return r;
}

namespace {

std::vector<std::vector<int>> table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("table"))
        throw std::invalid_argument("table JSON must be an object with a \"table\" key");
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("\"table\" must be a non-empty array of rows");
    std::vector<std::vector<int>> out;
    if (rows[0].is_array() && !rows[0].empty() && rows[0][0].is_string()) {
        // named elements: indices assigned in first-appearance order
        std::map<std::string, int> index;
        for (const auto& row : rows)
            for (const auto& cell : row) {
                std::string name = cell.get<std::string>();
                if (!index.count(name)) {
                    int next = static_cast<int>(index.size());
                    index[name] = next;
                }
            }
        for (const auto& row : rows) {
            std::vector<int> r;
            for (const auto& cell : row) r.push_back(index.at(cell.get<std::string>()));
            out.push_back(std::move(r));
        }
    } else {
        for (const auto& row : rows) {
            std::vector<int> r;
            for (const auto& cell : row) r.push_back(cell.get<int>());
            out.push_back(std::move(r));
        }
    }
    if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(out.size()))
        throw std::invalid_argument("\"size\" disagrees with the table row count");
    return out;
}

}  // namespace

std::vector<std::vector<int>> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty table file: " + path);
    if (text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text);
        return table_from_json(j);
    }
    std::vector<std::vector<int>> out;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::stringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) out.push_back(std::move(row));
    }
    if (out.empty()) throw std::invalid_argument("no rows in table file: " + path);
    return out;
}

std::vector<std::vector<int>> load_table_spec(const std::string& spec) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string p;
        while (std::getline(ss, p, ':')) parts.push_back(p);
        return parts;
    };
    auto parts = split(spec);
    auto as_int = [&](const std::string& s) {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer in spec: " + spec);
        return v;
    };
    if (parts.size() == 2 && parts[0] == "dihedral")
        return dihedral_quandle(as_int(parts[1])).table();
    if (parts.size() == 2 && parts[0] == "trivial")
        return trivial_quandle(as_int(parts[1])).table();
    if (parts.size() == 2 && parts[0] == "cyclic") return cyclic_rack(as_int(parts[1])).table();
    if (parts.size() == 3 && parts[0] == "alexander")
        return alexander_quandle(as_int(parts[1]), as_int(parts[2])).table();
    if (parts.size() > 1 && (parts[0] == "dihedral" || parts[0] == "trivial" ||
                             parts[0] == "cyclic" || parts[0] == "alexander"))
        throw std::invalid_argument("malformed quandle spec: " + spec);
    return load_table_file(spec);
}

Rack rack_from_spec(const std::string& spec) { return Rack(load_table_spec(spec)); }

}  // namespace quandlekit
