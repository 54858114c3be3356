#pragma once

#include <json.hpp>

#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "bundled_data.hpp"
#include "errors.hpp"
#include "knots.hpp"

namespace isharp {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Table identifiers.
namespace tables {
inline constexpr const char* nu_r0 = "T1";
inline constexpr const char* census = "T2";
inline constexpr const char* nu_tau = "T3";
inline constexpr const char* integer_surgeries = "T4";
inline constexpr const char* spectral = "T5";
inline constexpr const char* census_surgeries = "T6";
inline constexpr const char* census_covers = "T7";
inline constexpr const char* census_triads = "T8";
inline constexpr const char* knots = "KNOT";
inline constexpr const char* examples = "EX";
inline constexpr const char* identities = "IDENT";
inline constexpr const char* triangles = "TRI";
inline constexpr const char* rules = "RULE";
inline constexpr const char* citations = "CITE";
}  // namespace tables

struct Record {
    int schema_version = kSchemaVersion;
    std::string table;
    std::string key;
    ojson payload;
    std::string citation;

    ojson to_json() const {
        ojson j;
        j["schema_version"] = schema_version;
        j["table"] = table;
        j["key"] = key;
        j["payload"] = payload;
        j["citation"] = citation;
        return j;
    }
    std::string to_line() const { return to_json().dump(); }

    friend bool operator==(const Record& a, const Record& b) {
        return a.schema_version == b.schema_version && a.table == b.table && a.key == b.key &&
               a.payload == b.payload && a.citation == b.citation;
    }
};

struct KnotRecord {
    std::string name;
    std::vector<std::string> aliases;
    StructuralData structural;
    std::string citation;
};

// Where an alias points: a record name (or "U") and whether it names the mirror.
struct AliasTarget {
    std::string name;
    bool mirrored = false;
    friend bool operator==(const AliasTarget&, const AliasTarget&) = default;
};

namespace data_detail {

inline Tri tri_from(const ojson& j, const std::string& what) {
    if (j.is_null()) return Tri::unknown;
    if (!j.is_boolean()) throw IntegrityError(what + " must be true, false or null");
    return j.get<bool>() ? Tri::yes : Tri::no;
}

inline std::optional<Int> int_from(const ojson& j, const std::string& what) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_number_integer()) throw IntegrityError(what + " must be an integer or null");
    return Int(j.get<long long>());
}

inline Range range_from(const ojson& j, const std::string& what) {
    if (j.is_null()) return Range::unknown();
    if (j.is_number_integer()) return Range::exact(j.get<long long>());
    if (j.is_object() && j.contains("lo") && j.contains("hi")) {
        Range r;
        r.lo = Int(j.at("lo").get<long long>());
        if (!j.at("hi").is_null()) r.hi = Int(j.at("hi").get<long long>());
        return r;
    }
    throw IntegrityError(what + " must be an integer, {lo,hi} or null");
}

inline const ojson& field(const Record& r, const char* name) {
    if (!r.payload.contains(name))
        throw IntegrityError(r.table + " " + r.key + ": missing payload field '" + name + "'");
    return r.payload.at(name);
}

}  // namespace data_detail

inline KnotRecord knot_record_from(const Record& r) {
    using namespace data_detail;
    KnotRecord k;
    k.name = r.key;
    k.citation = r.citation;
    std::string w = "KNOT " + r.key + ": ";
    for (const auto& a : field(r, "aliases")) k.aliases.push_back(a.get<std::string>());
    auto& s = k.structural;
    s.genus = range_from(field(r, "genus"), w + "genus");
    s.slice_genus = range_from(field(r, "slice_genus"), w + "slice_genus");
    s.signature = int_from(field(r, "signature"), w + "signature");
    s.determinant = int_from(field(r, "determinant"), w + "determinant");
    if (!field(r, "alexander").is_null()) {
        std::vector<Int> a;
        for (const auto& c : field(r, "alexander")) a.emplace_back(c.get<long long>());
        s.alexander = a;
    }
    s.max_self_linking = int_from(field(r, "max_self_linking"), w + "max_self_linking");
    s.alternating = tri_from(field(r, "alternating"), w + "alternating");
    s.quasipositive = tri_from(field(r, "quasipositive"), w + "quasipositive");
    s.mirror_quasipositive = tri_from(field(r, "mirror_quasipositive"), w + "mirror_quasipositive");
    s.positive = tri_from(field(r, "positive"), w + "positive");
    s.mirror_positive = tri_from(field(r, "mirror_positive"), w + "mirror_positive");
    s.slice = tri_from(field(r, "slice"), w + "slice");
    s.amphichiral = tri_from(field(r, "amphichiral"), w + "amphichiral");
    s.homogeneous = tri_from(field(r, "homogeneous"), w + "homogeneous");
    s.instanton_lspace = tri_from(field(r, "instanton_lspace"), w + "instanton_lspace");
    s.mirror_instanton_lspace = tri_from(field(r, "mirror_instanton_lspace"), w + "mirror_instanton_lspace");
    s.thin_odd_khovanov = tri_from(field(r, "thin_odd_khovanov"), w + "thin_odd_khovanov");
    s.odd_khovanov_dim = int_from(field(r, "odd_khovanov_dim"), w + "odd_khovanov_dim");
    return k;
}

// Bounds every structural record must satisfy.
inline void check_structural(const std::string& who, const StructuralData& s) {
    auto fail = [&](const std::string& what) { throw IntegrityError(who + ": " + what); };
    if (s.genus.hi && s.genus.lo > *s.genus.hi) fail("genus interval is empty");
    if (s.slice_genus.hi && s.slice_genus.lo > *s.slice_genus.hi) fail("slice genus interval is empty");
    if (s.genus.hi && s.slice_genus.lo > *s.genus.hi) fail("slice genus exceeds genus");
    if (s.signature && *s.signature % 2 != 0) fail("signature is odd");
    if (s.determinant && (*s.determinant <= 0 || *s.determinant % 2 == 0)) fail("determinant is not a positive odd integer");
    if (s.alexander && s.determinant && abs_int(alexander_at_minus_one(*s.alexander)) != *s.determinant)
        fail("determinant differs from |Alexander(-1)|");
    if (s.alexander && s.genus.hi && Int(s.alexander->size() - 1) > *s.genus.hi)
        fail("Alexander degree exceeds genus");
    if (s.slice == Tri::yes && s.slice_genus.lo > 0) fail("slice knot with positive slice genus");
    if (s.positive == Tri::yes && s.quasipositive == Tri::no) fail("positive but not quasipositive");
    if (s.mirror_positive == Tri::yes && s.mirror_quasipositive == Tri::no) fail("mirror positive but not quasipositive");
    if (s.thin_odd_khovanov == Tri::yes && s.odd_khovanov_dim && s.determinant && *s.odd_khovanov_dim != *s.determinant)
        fail("thin odd Khovanov homology of dimension other than det");
}

class Dataset {
public:
    Dataset() : memo_(std::make_shared<Memo>()) {}
    Dataset(const Dataset& o) : records_(o.records_), memo_(std::make_shared<Memo>()) { index(); }
    Dataset& operator=(const Dataset& o) {
        if (this != &o) {
            records_ = o.records_;
            memo_ = std::make_shared<Memo>();
            index();
        }
        return *this;
    }
    Dataset(Dataset&&) = default;
    Dataset& operator=(Dataset&&) = default;

    // Parses record lines and checks per-record bounds. Engine-level checks
    // live in load() and load_text().
    static Dataset parse(std::string_view text) {
        Dataset ds;
        std::size_t line_no = 0, start = 0;
        while (start < text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            start = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
            ojson j;
            try {
                j = ojson::parse(line);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.byte);
            }
            ds.records_.push_back(record_from(j, line_no));
        }
        ds.index();
        return ds;
    }

    static Dataset read_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DomainError("cannot open dataset file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }

    std::string save() const {
        std::string out;
        for (const auto& r : records_) {
            out += r.to_line();
            out += '\n';
        }
        return out;
    }

    const std::vector<Record>& records() const { return records_; }

    const Record* find(const std::string& table, const std::string& key) const {
        auto it = by_key_.find(table + "\x1f" + key);
        return it == by_key_.end() ? nullptr : &records_[it->second];
    }

    const Record& lookup(const std::string& table, const std::string& key) const {
        if (const Record* r = find(table, key)) return *r;
        throw DomainError("no entry '" + key + "' in table " + table);
    }

    std::vector<const Record*> table(const std::string& t) const {
        std::vector<const Record*> out;
        for (const auto& r : records_)
            if (r.table == t) out.push_back(&r);
        return out;
    }

    const KnotRecord* knot_record(const std::string& name) const {
        auto it = knots_.find(name);
        return it == knots_.end() ? nullptr : &it->second;
    }

    const std::map<std::string, KnotRecord>& knot_records() const { return knots_; }

    // Alias target of an expression, by its printed form.
    std::optional<AliasTarget> alias(const KnotExpr& k) const {
        auto it = aliases_.find(to_string(k));
        if (it == aliases_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<std::string> aliases_of(const std::string& name) const {
        if (auto* k = knot_record(name)) return k->aliases;
        if (auto* ex = find(tables::examples, name)) {
            std::vector<std::string> out;
            for (const auto& a : ex->payload.at("aliases")) out.push_back(a.get<std::string>());
            return out;
        }
        return {};
    }

    std::string rule_citation(const std::string& rule) const {
        if (const Record* r = find(tables::rules, rule)) return r->citation;
        return "";
    }

    std::string rule_name(const std::string& rule) const {
        if (const Record* r = find(tables::rules, rule)) return r->payload.at("name").get<std::string>();
        return rule;
    }

    friend bool operator==(const Dataset& a, const Dataset& b) { return a.records_ == b.records_; }

    // Thread-safe cache of derived values keyed by string.
    template <typename T>
    std::shared_ptr<const T> memo_get(const std::string& key) const {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto it = memo_->values.find(key);
        if (it == memo_->values.end()) return nullptr;
        return std::static_pointer_cast<const T>(it->second);
    }

    template <typename T>
    std::shared_ptr<const T> memo_put(const std::string& key, std::shared_ptr<const T> v) const {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto [it, inserted] = memo_->values.emplace(key, v);
        return std::static_pointer_cast<const T>(it->second);
    }

    // Serializes one-time computations (such as solving the constraint network).
    std::recursive_mutex& compute_mutex() const { return memo_->compute; }

private:
    struct Memo {
        std::mutex mu;
        std::recursive_mutex compute;
        std::unordered_map<std::string, std::shared_ptr<const void>> values;
    };

    static Record record_from(const ojson& j, std::size_t line_no) {
        auto where = "line " + std::to_string(line_no);
        if (!j.is_object()) throw IntegrityError(where + ": record is not an object");
        for (const char* f : {"schema_version", "table", "key", "payload", "citation"})
            if (!j.contains(f)) throw IntegrityError(where + ": missing field '" + f + "'");
        Record r;
        if (!j.at("schema_version").is_number_integer() || j.at("schema_version").get<int>() != kSchemaVersion)
            throw IntegrityError(where + ": unsupported schema_version " + j.at("schema_version").dump());
        r.schema_version = kSchemaVersion;
        r.table = j.at("table").get<std::string>();
        r.key = j.at("key").get<std::string>();
        r.payload = j.at("payload");
        r.citation = j.at("citation").get<std::string>();
        if (!r.payload.is_object()) throw IntegrityError(where + ": payload is not an object");
        static const std::set<std::string> known{tables::nu_r0, tables::census, tables::nu_tau,
                                                 tables::integer_surgeries, tables::spectral,
                                                 tables::census_surgeries, tables::census_covers,
                                                 tables::census_triads, tables::knots, tables::examples,
                                                 tables::identities, tables::triangles, tables::rules,
                                                 tables::citations};
        if (!known.count(r.table)) throw IntegrityError(where + ": unknown table '" + r.table + "'");
        return r;
    }

    void index() {
        by_key_.clear();
        knots_.clear();
        aliases_.clear();
        for (std::size_t i = 0; i < records_.size(); ++i) {
            const auto& r = records_[i];
            auto [it, inserted] = by_key_.emplace(r.table + "\x1f" + r.key, i);
            if (!inserted) throw IntegrityError("duplicate key '" + r.key + "' in table " + r.table);
        }
        for (const auto& r : records_) {
            if (r.table != tables::knots) continue;
            KnotRecord k = knot_record_from(r);
            check_structural("KNOT " + k.name, k.structural);
            knots_.emplace(k.name, std::move(k));
        }
        auto add_alias = [&](const std::string& text, const std::string& name) {
            KnotExpr e;
            try {
                e = parse_knot(text);
            } catch (const DomainError& err) {
                throw IntegrityError("alias '" + text + "' of " + name + ": " + err.what());
            }
            auto put = [&](const KnotExpr& x, bool m) {
                std::string key = to_string(x);
                AliasTarget t{name, m};
                auto [it, inserted] = aliases_.emplace(key, t);
                // An amphichiral knot is its own mirror; keep the unmirrored target.
                if (!inserted && it->second.name == name) {
                    it->second.mirrored = it->second.mirrored && m;
                    return;
                }
                if (!inserted && !(it->second == t))
                    throw IntegrityError("alias '" + key + "' names both " + it->second.name + " and " + name);
            };
            put(e, false);
            put(mirror(e), true);
        };
        for (const auto& [name, k] : knots_) {
            add_alias(name, name);
            for (const auto& a : k.aliases) add_alias(a, name);
        }
        for (const auto& r : records_) {
            if (r.table != tables::examples || !r.payload.contains("aliases")) continue;
            for (const auto& a : r.payload.at("aliases")) add_alias(a.get<std::string>(), r.key);
        }
    }

    std::vector<Record> records_;
    std::unordered_map<std::string, std::size_t> by_key_;
    std::map<std::string, KnotRecord> knots_;
    std::unordered_map<std::string, AliasTarget> aliases_;
    std::shared_ptr<Memo> memo_;
};

// Two-bridge codes reduced through the mirror rule TB(-a,-b) = m(TB(a,b)),
// the shift between TB(2,b) and TB(-2,b-1) for odd b, TB(a,0) = TB(0,b) = U,
// and the twist knots TB(2,2k) = Tw(2k-1), TB(-2,2k) = Tw(2k).
inline std::optional<KnotExpr> two_bridge_rewrite(const KnotExpr& k) {
    if (k.kind != KnotExpr::Kind::two_bridge) return std::nullopt;
    long long a = k.params[0], b = k.params[1];
    if (a == 0 || b == 0) return unknot();
    if (std::llabs(a) != 2) return std::nullopt;
    if (b % 2 != 0) return two_bridge(a == 2 ? -2 : 2, a == 2 ? b - 1 : b + 1);
    if (a == 2) return b > 0 ? twist(b - 1) : twist(-b, true);
    return b > 0 ? twist(b) : twist(-b - 1, true);
}

// Every description of the same atom reachable through aliases and rewrites.
inline std::vector<KnotExpr> equivalent_forms(const KnotExpr& k, const Dataset& ds) {
    std::vector<KnotExpr> out;
    std::set<std::string> seen;
    std::deque<KnotExpr> queue{k};
    while (!queue.empty()) {
        KnotExpr f = queue.front();
        queue.pop_front();
        std::string key = to_string(f);
        if (!seen.insert(key).second) continue;
        out.push_back(f);
        if (auto rw = two_bridge_rewrite(f)) queue.push_back(*rw);
        if (auto target = ds.alias(f)) {
            if (target->name == "U") {
                queue.push_back(unknot());
            } else {
                queue.push_back(named(target->name, target->mirrored));
            }
            for (const auto& a : ds.aliases_of(target->name)) {
                KnotExpr e = parse_knot(a);
                queue.push_back(target->mirrored ? mirror(e) : e);
            }
        }
    }
    return out;
}

// A representative shared by all descriptions of a knot and its mirror:
// the knot is rep, or the mirror of rep when mirrored is set. Named records
// are preferred, then the shortest printed form.
struct AtomKey {
    KnotExpr rep;
    bool mirrored = false;
    std::string key() const { return to_string(rep); }
};

inline AtomKey atom_key(const KnotExpr& k, const Dataset& ds) {
    auto rank = [](const KnotExpr& e) { return e.kind == KnotExpr::Kind::unknot ? 0 : e.kind == KnotExpr::Kind::named ? 1 : 2; };
    std::optional<AtomKey> best;
    auto better = [&](const AtomKey& a, const AtomKey& b) {
        std::string sa = a.key(), sb = b.key();
        return std::make_tuple(rank(a.rep), sa.size(), sa, a.mirrored) <
               std::make_tuple(rank(b.rep), sb.size(), sb, b.mirrored);
    };
    for (const auto& f : equivalent_forms(k, ds)) {
        for (const AtomKey& cand : {AtomKey{f, false}, AtomKey{mirror(f), true}}) {
            if (cand.rep.kind == KnotExpr::Kind::named && cand.rep.mirrored) continue;
            if (cand.rep.kind == KnotExpr::Kind::twist && cand.rep.mirrored) continue;
            if (!best || better(cand, *best)) best = cand;
        }
    }
    return *best;
}

// The canonical record behind an alias code, with the mirror flag.
inline std::pair<const KnotRecord*, bool> resolve_alias(const std::string& code, const Dataset& ds) {
    KnotExpr k = parse_knot(code);
    for (const auto& f : equivalent_forms(k, ds)) {
        if (f.kind == KnotExpr::Kind::named) {
            if (const KnotRecord* r = ds.knot_record(f.name)) return {r, f.mirrored};
        }
    }
    throw DomainError("'" + code + "' is not a registered alias");
}

namespace data_detail {

inline void merge_tri(Tri& a, Tri b, const std::string& who, const char* what) {
    if (b == Tri::unknown) return;
    if (a == Tri::unknown) {
        a = b;
        return;
    }
    if (a != b) throw IntegrityError(who + ": conflicting values for " + what);
}

inline void merge_int(std::optional<Int>& a, const std::optional<Int>& b, const std::string& who, const char* what) {
    if (!b) return;
    if (!a) {
        a = b;
        return;
    }
    if (*a != *b) throw IntegrityError(who + ": conflicting values for " + what + " (" + a->str() + " vs " + b->str() + ")");
}

inline void merge_range(Range& a, const Range& b, const std::string& who, const char* what) {
    if (b.lo > a.lo) a.lo = b.lo;
    if (b.hi && (!a.hi || *b.hi < *a.hi)) a.hi = b.hi;
    if (a.hi && a.lo > *a.hi) throw IntegrityError(who + ": conflicting values for " + what);
}

}  // namespace data_detail

inline void merge_into(StructuralData& a, const StructuralData& b, const std::string& who) {
    using namespace data_detail;
    merge_range(a.genus, b.genus, who, "genus");
    merge_range(a.slice_genus, b.slice_genus, who, "slice genus");
    merge_int(a.signature, b.signature, who, "signature");
    merge_int(a.determinant, b.determinant, who, "determinant");
    if (b.alexander) {
        if (a.alexander && *a.alexander != *b.alexander) throw IntegrityError(who + ": conflicting Alexander polynomials");
        a.alexander = b.alexander;
    }
    merge_int(a.max_self_linking, b.max_self_linking, who, "max self-linking");
    merge_tri(a.alternating, b.alternating, who, "alternating");
    merge_tri(a.quasipositive, b.quasipositive, who, "quasipositive");
    merge_tri(a.mirror_quasipositive, b.mirror_quasipositive, who, "mirror quasipositive");
    merge_tri(a.positive, b.positive, who, "positive");
    merge_tri(a.mirror_positive, b.mirror_positive, who, "mirror positive");
    merge_tri(a.slice, b.slice, who, "slice");
    merge_tri(a.amphichiral, b.amphichiral, who, "amphichiral");
    merge_tri(a.homogeneous, b.homogeneous, who, "homogeneous");
    merge_tri(a.instanton_lspace, b.instanton_lspace, who, "instanton L-space");
    merge_tri(a.mirror_instanton_lspace, b.mirror_instanton_lspace, who, "mirror instanton L-space");
    merge_tri(a.thin_odd_khovanov, b.thin_odd_khovanov, who, "thin odd Khovanov");
    merge_int(a.odd_khovanov_dim, b.odd_khovanov_dim, who, "odd Khovanov dimension");
}

// Consequences among structural fields: positive knots are quasipositive with
// g_s = g, slice knots have g_s = 0, alternating knots are quasi-alternating
// and hence thin, and g_s <= g.
inline void close_structural(StructuralData& s, const std::string& who) {
    if (s.positive == Tri::yes) {
        data_detail::merge_tri(s.quasipositive, Tri::yes, who, "quasipositive");
        data_detail::merge_range(s.slice_genus, s.genus, who, "slice genus");
    }
    if (s.mirror_positive == Tri::yes) {
        data_detail::merge_tri(s.mirror_quasipositive, Tri::yes, who, "mirror quasipositive");
        data_detail::merge_range(s.slice_genus, s.genus, who, "slice genus");
    }
    if (s.slice == Tri::yes) data_detail::merge_range(s.slice_genus, Range::exact(0), who, "slice genus");
    if (s.slice_genus.is_exact() && s.slice_genus.lo > 0) data_detail::merge_tri(s.slice, Tri::no, who, "slice");
    if (s.alternating == Tri::yes) data_detail::merge_tri(s.thin_odd_khovanov, Tri::yes, who, "thin odd Khovanov");
    if (s.genus.hi && (!s.slice_genus.hi || *s.genus.hi < *s.slice_genus.hi)) s.slice_genus.hi = s.genus.hi;
    if (s.alexander && !s.determinant) s.determinant = abs_int(alexander_at_minus_one(*s.alexander));
    if (s.thin_odd_khovanov == Tri::yes && s.determinant && !s.odd_khovanov_dim) s.odd_khovanov_dim = s.determinant;
    check_structural(who, s);
}

StructuralData structural(const KnotExpr& k, const Dataset& ds);

namespace data_detail {

inline StructuralData atom_structural(const KnotExpr& k, const Dataset& ds) {
    std::string who = to_string(k);
    StructuralData s;
    for (const auto& f : equivalent_forms(k, ds)) {
        merge_into(s, family_structural(f), who);
        if (f.kind == KnotExpr::Kind::named) {
            if (const KnotRecord* r = ds.knot_record(f.name)) {
                merge_into(s, f.mirrored ? mirror(r->structural) : r->structural, who);
            }
        }
    }
    close_structural(s, who);
    return s;
}

inline StructuralData sum_structural(const KnotExpr& k, const Dataset& ds) {
    StructuralData s;
    s.genus = s.slice_genus = Range::exact(0);
    s.signature = 0;
    s.determinant = 1;
    s.alexander = std::vector<Int>{1};
    bool all_slice = true, any_not_known_slice = false;
    Int gs_hi = 0;
    bool gs_bounded = true;
    bool g_exact = true;
    Int g_sum = 0;
    for (const auto& c : k.children) {
        StructuralData x = structural(c, ds);
        if (x.genus.is_exact()) g_sum += x.genus.lo;
        else g_exact = false;
        if (x.slice_genus.hi) gs_hi += *x.slice_genus.hi;
        else gs_bounded = false;
        if (s.signature && x.signature) s.signature = *s.signature + *x.signature;
        else s.signature.reset();
        if (s.determinant && x.determinant) s.determinant = *s.determinant * *x.determinant;
        else s.determinant.reset();
        if (s.alexander && x.alexander) s.alexander = alexander_product(*s.alexander, *x.alexander);
        else s.alexander.reset();
        if (x.slice != Tri::yes) all_slice = false;
        if (x.slice == Tri::unknown) any_not_known_slice = true;
        (void)any_not_known_slice;
    }
    s.genus = g_exact ? Range::exact(g_sum) : Range::unknown();
    s.slice_genus = Range{0, gs_bounded ? std::optional<Int>(gs_hi) : std::nullopt};
    if (all_slice) s.slice = Tri::yes;
    close_structural(s, to_string(k));
    return s;
}

}  // namespace data_detail

// Structural data of a cable: the genus formula, plus the L-space criterion
// once the companion's L-space status and genus are known.
inline Tri lspace_cable(long long p, long long q, const KnotExpr& companion, const Dataset& ds) {
    if (q < 2 || knot_detail::gcd_ll(p, q) != 1) throw DomainError("cable parameters need q >= 2 and gcd(p,q) = 1");
    StructuralData c = structural(companion, ds);
    if (c.instanton_lspace == Tri::no) return Tri::no;
    if (c.instanton_lspace == Tri::unknown || !c.genus.is_exact()) return Tri::unknown;
    Rational slope(p, q);
    return slope > Rational(2 * c.genus.lo - 1) ? Tri::yes : Tri::no;
}

inline StructuralData structural(const KnotExpr& k, const Dataset& ds) {
    using K = KnotExpr::Kind;
    std::string key = "structural:" + to_string(k);
    if (auto hit = ds.memo_get<StructuralData>(key)) return *hit;
    StructuralData s;
    if (k.kind == K::sum) {
        s = data_detail::sum_structural(k, ds);
    } else if (k.kind == K::cable) {
        long long p = k.params[0], q = k.params[1];
        const KnotExpr& c = k.children[0];
        StructuralData cs = structural(c, ds);
        if (cs.genus.is_exact()) s.genus = Range::exact(Int((std::llabs(p) - 1) * (q - 1) / 2) + q * cs.genus.lo);
        s.instanton_lspace = lspace_cable(p, q, c, ds);
        s.mirror_instanton_lspace = lspace_cable(-p, q, mirror(c), ds);
        close_structural(s, to_string(k));
    } else {
        s = data_detail::atom_structural(k, ds);
    }
    ds.memo_put(key, std::make_shared<const StructuralData>(s));
    return s;
}

inline Range genus(const KnotExpr& k, const Dataset& ds) { return structural(k, ds).genus; }

// The dataset compiled into the library.
inline const Dataset& bundled_dataset() {
    static const Dataset ds = Dataset::parse(kBundledData);
    return ds;
}

}  // namespace isharp
