#include "slword/base_table.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <unordered_map>
#include <vector>

#include "search_internal.hpp"

namespace slword {

namespace {

constexpr char kMagic[5] = {'S', 'W', 'B', 'T', '1'};

void write_u8(std::ostream& os, std::uint8_t v) {
  os.put(static_cast<char>(v));
}

void write_u32(std::ostream& os, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void write_u64(std::ostream& os, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void write_i32(std::ostream& os, std::int32_t v) {
  write_u32(os, static_cast<std::uint32_t>(v));
}

std::uint8_t read_u8(std::istream& is) {
  int c = is.get();
  if (c < 0) throw ParseError("base table: truncated file");
  return static_cast<std::uint8_t>(c);
}

std::uint32_t read_u32(std::istream& is) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(read_u8(is)) << (8 * i);
  return v;
}

std::uint64_t read_u64(std::istream& is) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(read_u8(is)) << (8 * i);
  return v;
}

std::int32_t read_i32(std::istream& is) {
  return static_cast<std::int32_t>(read_u32(is));
}

packed::Engine::Mat fold_word(const detail::StepImages& steps, const Word& w) {
  packed::Engine::Mat acc = steps.eng.identity();
  packed::Engine::Mat tmp(acc.size());
  for (Letter l : w.letters) {
    int e = l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
    if (e < 0 || e >= static_cast<int>(steps.fwd.size())) {
      throw ParseError("base table: letter outside the generating set");
    }
    steps.eng.mul(tmp, acc, steps.fwd[e]);
    acc.swap(tmp);
  }
  return acc;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

struct BaseTable::Impl {
  TableMode mode = TableMode::Full;
  int b = 1;
  std::int64_t p = 3;
  int m = 2;
  int set_size = 0;

  // Full mode: the whole breadth-first tree over G_b.
  detail::BfsTree tree;
  std::optional<packed::Engine> eng_b;

  // Coset mode: materialized words keyed by packed matrix bytes.
  std::unordered_map<std::string, Word> level0;
  std::optional<packed::Engine> eng1;
  std::vector<std::unordered_map<std::string, Word>> coset;  // [l-1]
  std::vector<packed::Engine> eng_l;
};

BaseTable::BaseTable(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
BaseTable::BaseTable(BaseTable&&) noexcept = default;
BaseTable& BaseTable::operator=(BaseTable&&) noexcept = default;
BaseTable::~BaseTable() = default;

TableMode BaseTable::mode() const { return impl_->mode; }
int BaseTable::level() const { return impl_->b; }

std::uint64_t BaseTable::entries() const {
  if (impl_->mode == TableMode::Full) return impl_->tree.key_of.size();
  std::uint64_t n = impl_->level0.size();
  for (const auto& lvl : impl_->coset) n += lvl.size();
  return n;
}

namespace {

// All classes I + p^l A, A running over sl_m(F_p), as packed matrices at
// exponent l+1.  Enumeration order is the odometer over the m^2 - 1 free
// entries, so it is deterministic.
std::vector<packed::Engine::Mat> level_classes(const packed::Engine& eng,
                                               int ell) {
  std::int64_t p = eng.p();
  int m = eng.m();
  std::uint64_t pl = 1;
  for (int i = 0; i < ell; ++i) pl *= static_cast<std::uint64_t>(p);
  std::uint64_t q = eng.q();

  int free_slots = m * m - 1;
  std::vector<int> digits(free_slots, 0);
  std::vector<packed::Engine::Mat> out;
  for (;;) {
    packed::Engine::Mat g(static_cast<std::size_t>(m) * m, 0);
    std::int64_t diag_sum = 0;
    int slot = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == m - 1 && j == m - 1) continue;
        std::int64_t a = digits[slot++];
        if (i == j) diag_sum += a;
        g[i * m + j] = ((i == j ? 1 : 0) + pl * static_cast<std::uint64_t>(a)) % q;
      }
    }
    std::int64_t last = ((-diag_sum) % p + p) % p;
    g[(m - 1) * m + (m - 1)] =
        (1 + pl * static_cast<std::uint64_t>(last)) % q;
    out.push_back(std::move(g));

    int carry = 0;
    while (carry < free_slots && ++digits[carry] == p) {
      digits[carry] = 0;
      ++carry;
    }
    if (carry == free_slots) break;
  }
  return out;
}

}  // namespace

BaseTable BaseTable::build(const GeneratingSet& S, const SynthConfig& cfg) {
  if (cfg.n0 < 1) throw InvalidGroupSpec("SynthConfig: n0 must be >= 1");
  if (cfg.memory_budget < 2 || cfg.forward_cap < 2) {
    throw InvalidGroupSpec("SynthConfig: budgets must be at least 2");
  }
  const GroupSpec& spec = S.spec();
  auto impl = std::make_unique<Impl>();
  impl->p = spec.p;
  impl->m = spec.m;
  impl->set_size = S.size();
  impl->b = std::min(cfg.n0 + 1, spec.n);
  int b = impl->b;

  Int order_b = group_order(spec.p, spec.m, b);
  if (order_b <= Int(cfg.memory_budget)) {
    impl->mode = TableMode::Full;
    detail::StepImages steps = detail::StepImages::make(S, b);
    std::uint64_t cap = order_b.convert_to<std::uint64_t>() + 1;
    impl->tree = detail::forward_ball(steps, cap);
    if (Int(impl->tree.key_of.size()) < order_b) {
      throw NotGenerating("the set reaches " +
                          std::to_string(impl->tree.key_of.size()) + " of " +
                          order_b.str() + " elements at exponent " +
                          std::to_string(b));
    }
    impl->eng_b = steps.eng;
    return BaseTable(std::move(impl));
  }

  impl->mode = TableMode::Cosets;
  Int order_1 = group_order(spec.p, spec.m, 1);
  if (order_1 > Int(cfg.memory_budget)) {
    throw TooLarge("level-1 group of order " + order_1.str() +
                   " exceeds the enumeration budget");
  }
  {
    detail::StepImages steps1 = detail::StepImages::make(S, 1);
    std::uint64_t cap = order_1.convert_to<std::uint64_t>() + 1;
    detail::BfsTree tree1 = detail::forward_ball(steps1, cap);
    if (Int(tree1.key_of.size()) < order_1) {
      throw NotGenerating("the set reaches " +
                          std::to_string(tree1.key_of.size()) + " of " +
                          order_1.str() + " elements mod " +
                          std::to_string(spec.p));
    }
    impl->level0.reserve(tree1.key_of.size());
    for (std::uint32_t id = 0; id < tree1.key_of.size(); ++id) {
      impl->level0.emplace(tree1.key_of[id], detail::word_of(tree1, id));
    }
    impl->eng1 = steps1.eng;
  }

  for (int ell = 1; ell <= b - 1; ++ell) {
    detail::StepImages steps = detail::StepImages::make(S, ell + 1);
    Int order_lvl = group_order(spec.p, spec.m, ell + 1);
    std::uint64_t fcap = std::min(cfg.forward_cap, cfg.memory_budget);
    detail::BfsTree ball = detail::forward_ball(steps, fcap);

    auto check_closed = [&]() {
      if (ball.complete && Int(ball.key_of.size()) < order_lvl) {
        throw NotGenerating(
            "the set closes on " + std::to_string(ball.key_of.size()) +
            " of " + order_lvl.str() + " elements at exponent " +
            std::to_string(ell + 1));
      }
    };
    check_closed();

    std::unordered_map<std::string, Word> lvl_words;
    for (const packed::Engine::Mat& cls : level_classes(steps.eng, ell)) {
      std::optional<Word> w;
      for (;;) {
        w = detail::backward_connect(steps, ball, cls, fcap);
        if (w) break;
        if (ball.complete) {
          // The reachable set is closed and misses this class.
          throw NotGenerating("a level-" + std::to_string(ell) +
                              " class is outside the closed reachable set");
        }
        if (fcap >= cfg.memory_budget) {
          throw TooLarge("bidirectional search exhausted the budget at level " +
                         std::to_string(ell));
        }
        fcap = std::min(fcap * 4, cfg.memory_budget);
        ball = detail::forward_ball(steps, fcap);
        check_closed();
      }
      if (fold_word(steps, *w) != cls) {
        throw Error("base table: internal verification of a coset word failed");
      }
      lvl_words.emplace(steps.eng.encode_bytes(cls), std::move(*w));
    }
    impl->coset.push_back(std::move(lvl_words));
    impl->eng_l.push_back(steps.eng);
  }
  return BaseTable(std::move(impl));
}

Word BaseTable::word_for(const ModMatrix& g) const {
  if (impl_->mode != TableMode::Full) {
    throw Error("word_for: table is in coset mode");
  }
  if (g.ring().p() != impl_->p || g.ring().w() != impl_->b ||
      g.m() != impl_->m) {
    throw Error("word_for: element is not at the table exponent");
  }
  if (g.det() != 1) {
    throw Error("word_for: determinant is not 1");
  }
  std::string key = impl_->eng_b->encode_bytes(impl_->eng_b->from_mod(g));
  auto it = impl_->tree.index.find(key);
  if (it == impl_->tree.index.end()) {
    throw Error("word_for: element missing from a complete table");
  }
  return detail::word_of(impl_->tree, it->second);
}

Word BaseTable::word_level0(const ModMatrix& g) const {
  if (g.ring().p() != impl_->p || g.ring().w() != 1 || g.m() != impl_->m) {
    throw Error("word_level0: element is not at exponent 1");
  }
  if (g.det() != 1) throw Error("word_level0: determinant is not 1");
  if (impl_->mode == TableMode::Full) {
    return word_for(sl_lift(g, impl_->b));
  }
  std::string key = impl_->eng1->encode_bytes(impl_->eng1->from_mod(g));
  auto it = impl_->level0.find(key);
  if (it == impl_->level0.end()) {
    throw Error("word_level0: element missing from a complete level-0 map");
  }
  return it->second;
}

Word BaseTable::word_level(const ModMatrix& delta, int ell) const {
  if (ell < 1 || ell > impl_->b - 1) {
    throw Error("word_level: level " + std::to_string(ell) +
                " outside [1, " + std::to_string(impl_->b - 1) + "]");
  }
  if (delta.ring().p() != impl_->p || delta.ring().w() != ell + 1 ||
      delta.m() != impl_->m) {
    throw Error("word_level: element is not at exponent l+1");
  }
  if (delta.det() != 1) throw Error("word_level: determinant is not 1");
  if (delta.congruence_level() < ell) {
    throw Error("word_level: element is not congruent to I at level " +
                std::to_string(ell));
  }
  if (delta.is_identity()) return Word{};
  if (impl_->mode == TableMode::Full) {
    return word_for(sl_lift(delta, impl_->b));
  }
  const packed::Engine& eng = impl_->eng_l[ell - 1];
  std::string key = eng.encode_bytes(eng.from_mod(delta));
  auto it = impl_->coset[ell - 1].find(key);
  if (it == impl_->coset[ell - 1].end()) {
    throw Error("word_level: class missing from a complete level map");
  }
  return it->second;
}

void BaseTable::save(std::ostream& os) const {
  os.write(kMagic, sizeof(kMagic));
  write_u8(os, impl_->mode == TableMode::Full ? 0 : 1);
  write_u64(os, static_cast<std::uint64_t>(impl_->p));
  write_u64(os, static_cast<std::uint64_t>(impl_->m));
  write_u64(os, static_cast<std::uint64_t>(impl_->b));
  if (impl_->mode == TableMode::Full) {
    write_u64(os, impl_->tree.key_of.size());
    for (std::uint32_t id = 0; id < impl_->tree.key_of.size(); ++id) {
      packed::Engine::Mat g = impl_->eng_b->decode_bytes(impl_->tree.key_of[id]);
      for (std::uint64_t e : g) write_u64(os, e);
      write_u32(os, impl_->tree.parent[id]);
      write_i32(os, impl_->tree.via[id]);
    }
    return;
  }
  write_u64(os, entries());
  auto dump_map = [&](const std::unordered_map<std::string, Word>& map,
                      const packed::Engine& eng, std::uint8_t lvl) {
    for (const auto& [key, word] : map) {
      write_u8(os, lvl);
      for (std::uint64_t e : eng.decode_bytes(key)) write_u64(os, e);
      write_u32(os, static_cast<std::uint32_t>(word.size()));
      for (Letter l : word.letters) write_i32(os, l);
    }
  };
  dump_map(impl_->level0, *impl_->eng1, 0);
  for (std::size_t i = 0; i < impl_->coset.size(); ++i) {
    dump_map(impl_->coset[i], impl_->eng_l[i],
             static_cast<std::uint8_t>(i + 1));
  }
}

void BaseTable::save_file(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("base table: cannot open " + path + " for writing");
  save(os);
  if (!os) throw Error("base table: write to " + path + " failed");
}

BaseTable BaseTable::load(std::istream& is, const GeneratingSet& S) {
  char magic[5];
  is.read(magic, sizeof(magic));
  if (is.gcount() != sizeof(magic) ||
      !std::equal(magic, magic + sizeof(magic), kMagic)) {
    throw ParseError("base table: bad magic");
  }
  std::uint8_t mode = read_u8(is);
  if (mode > 1) throw ParseError("base table: bad mode byte");
  auto p = static_cast<std::int64_t>(read_u64(is));
  auto m = static_cast<int>(read_u64(is));
  auto b = static_cast<int>(read_u64(is));
  const GroupSpec& spec = S.spec();
  if (p != spec.p || m != spec.m) {
    throw ParseError("base table: file is for different group parameters");
  }
  if (b < 1 || b > spec.n) {
    throw ParseError("base table: stored exponent does not fit the group");
  }
  std::uint64_t count = read_u64(is);

  auto impl = std::make_unique<Impl>();
  impl->p = p;
  impl->m = m;
  impl->b = b;
  impl->set_size = S.size();

  if (mode == 0) {
    impl->mode = TableMode::Full;
    if (Int(count) != group_order(p, m, b)) {
      throw ParseError("base table: full table has wrong cardinality");
    }
    detail::StepImages steps = detail::StepImages::make(S, b);
    std::vector<packed::Engine::Mat> mats;
    mats.reserve(count);
    packed::Engine::Mat scratch(static_cast<std::size_t>(m) * m);
    for (std::uint64_t id = 0; id < count; ++id) {
      packed::Engine::Mat g(static_cast<std::size_t>(m) * m);
      for (auto& e : g) {
        e = read_u64(is);
        if (e >= steps.eng.q()) throw ParseError("base table: entry overflow");
      }
      std::uint32_t parent = read_u32(is);
      std::int32_t via = read_i32(is);
      if (id == 0) {
        if (!steps.eng.is_identity(g) || via != -1) {
          throw ParseError("base table: root record is not the identity");
        }
      } else {
        if (parent >= id || via < 0 ||
            via >= static_cast<std::int32_t>(steps.fwd.size())) {
          throw ParseError("base table: record out of order");
        }
        steps.eng.mul(scratch, mats[parent], steps.fwd[via]);
        if (scratch != g) {
          throw ParseError("base table: tree edge fails verification");
        }
      }
      std::string key = steps.eng.encode_bytes(g);
      if (!impl->tree.index.emplace(key, static_cast<std::uint32_t>(id))
               .second) {
        throw ParseError("base table: duplicate element");
      }
      impl->tree.key_of.push_back(std::move(key));
      impl->tree.parent.push_back(parent);
      impl->tree.via.push_back(static_cast<std::int16_t>(via));
      impl->tree.dist.push_back(id == 0 ? 0 : impl->tree.dist[parent] + 1);
      mats.push_back(std::move(g));
    }
    impl->tree.complete = true;
    impl->eng_b = steps.eng;
    return BaseTable(std::move(impl));
  }

  impl->mode = TableMode::Cosets;
  detail::StepImages steps1 = detail::StepImages::make(S, 1);
  impl->eng1 = steps1.eng;
  std::vector<detail::StepImages> steps_l;
  for (int ell = 1; ell <= b - 1; ++ell) {
    steps_l.push_back(detail::StepImages::make(S, ell + 1));
    impl->eng_l.push_back(steps_l.back().eng);
  }
  impl->coset.resize(static_cast<std::size_t>(b - 1));

  for (std::uint64_t r = 0; r < count; ++r) {
    std::uint8_t lvl = read_u8(is);
    if (lvl > static_cast<std::uint8_t>(b - 1)) {
      throw ParseError("base table: record level out of range");
    }
    const detail::StepImages& steps = lvl == 0 ? steps1 : steps_l[lvl - 1];
    packed::Engine::Mat g(static_cast<std::size_t>(m) * m);
    for (auto& e : g) {
      e = read_u64(is);
      if (e >= steps.eng.q()) throw ParseError("base table: entry overflow");
    }
    std::uint32_t len = read_u32(is);
    if (len > (1u << 28)) throw ParseError("base table: word length overflow");
    Word w;
    w.letters.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) {
      std::int32_t l = read_i32(is);
      if (l == 0 || std::abs(l) > S.size()) {
        throw ParseError("base table: letter outside the generating set");
      }
      w.letters.push_back(l);
    }
    if (fold_word(steps, w) != g) {
      throw ParseError("base table: stored word fails verification");
    }
    if (lvl > 0) {
      ModMatrix gm = steps.eng.to_mod(g);
      if (gm.congruence_level() < lvl) {
        throw ParseError("base table: stored class is at the wrong level");
      }
    }
    auto& map = lvl == 0 ? impl->level0 : impl->coset[lvl - 1];
    if (!map.emplace(steps.eng.encode_bytes(g), std::move(w)).second) {
      throw ParseError("base table: duplicate record");
    }
  }
  if (Int(impl->level0.size()) != group_order(p, m, 1)) {
    throw ParseError("base table: level-0 map is incomplete");
  }
  Int classes = 1;
  for (int i = 0; i < m * m - 1; ++i) classes *= p;
  for (const auto& lvl_map : impl->coset) {
    if (Int(lvl_map.size()) != classes) {
      throw ParseError("base table: a level map is incomplete");
    }
  }
  return BaseTable(std::move(impl));
}

BaseTable BaseTable::load_file(const std::string& path,
                               const GeneratingSet& S) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("base table: cannot open " + path);
  return load(is, S);
}

std::string BaseTable::cache_filename(const GeneratingSet& S, int n0) {
  int b = std::min(n0 + 1, S.spec().n);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, "p=" + std::to_string(S.spec().p));
  h = fnv1a(h, ";m=" + std::to_string(S.spec().m));
  h = fnv1a(h, ";b=" + std::to_string(b));
  for (int i = 0; i < S.size(); ++i) {
    h = fnv1a(h, ";g" + std::to_string(i) + "=" +
                     S.gen(i).project(std::min(b, S.spec().n)).to_string());
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(h));
  return "slword_bt_p" + std::to_string(S.spec().p) + "_m" +
         std::to_string(S.spec().m) + "_b" + std::to_string(b) + "_" + hex +
         ".swbt";
}

}  // namespace slword
