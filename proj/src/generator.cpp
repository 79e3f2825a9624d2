#include "slimsell/generator.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace slimsell {

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph gen_erdos_renyi(vid_t n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must be in [0, 1]");
  }
  std::vector<std::pair<vid_t, vid_t>> pairs;
  if (p > 0.0 && n > 1) {
    if (p == 1.0) {
      for (vid_t u = 0; u < n; ++u) {
        for (vid_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
      }
    } else {
      SplitMix64 rng = SplitMix64(seed).split(0xe5);
      const double denom = std::log1p(-p);
      // Walk the pair index space [0, n*(n-1)/2) with geometric skips,
      // tracking the (u, v) cursor instead of solving the index equation.
      vid_t u = 0;
      vid_t v = 0;  // offset within row u: pairs (u, u+1+v)
      std::int64_t remaining_in_row = n - 1;
      bool done = false;
      auto advance = [&](std::int64_t steps) {
        while (steps >= remaining_in_row - v) {
          steps -= remaining_in_row - v;
          ++u;
          v = 0;
          remaining_in_row = n - 1 - u;
          if (u >= n - 1) {
            done = true;
            return;
          }
        }
        v += steps;
      };
      double unit = 1.0 - rng.next_unit();  // (0, 1]
      advance(static_cast<std::int64_t>(std::floor(std::log(unit) / denom)));
      while (!done) {
        pairs.emplace_back(u, u + 1 + v);
        unit = 1.0 - rng.next_unit();
        advance(1 + static_cast<std::int64_t>(std::floor(std::log(unit) / denom)));
      }
    }
  }
  return Graph::from_pairs(std::move(pairs), n);
}

Graph gen_kronecker(std::int64_t scale, std::int64_t edgefactor,
                    std::uint64_t seed, const std::array<double, 4>& initiator) {
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  if (edgefactor < 1) throw std::invalid_argument("edgefactor must be >= 1");
  const double sum =
      initiator[0] + initiator[1] + initiator[2] + initiator[3];
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("initiator probabilities must sum to 1");
  }
  const vid_t n = vid_t{1} << scale;
  const std::int64_t candidates = edgefactor * n;
  const double ab = initiator[0] + initiator[1];
  const double abc = ab + initiator[2];

  SplitMix64 rng = SplitMix64(seed).split(0x4b);
  std::vector<std::pair<vid_t, vid_t>> pairs;
  pairs.reserve(candidates);
  for (std::int64_t e = 0; e < candidates; ++e) {
    vid_t u = 0, v = 0;
    for (std::int64_t level = 0; level < scale; ++level) {
      const double r = rng.next_unit();
      const int ub = r >= ab;                       // lower half of A
      const int vb = ub ? (r >= abc) : (r >= initiator[0]);
      u = (u << 1) | ub;
      v = (v << 1) | vb;
    }
    pairs.emplace_back(u, v);
  }
  return Graph::from_pairs(std::move(pairs), n);
}

Graph gen_path(vid_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<vid_t, vid_t>> pairs;
  for (vid_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_pairs(std::move(pairs), n);
}

Graph gen_clique(vid_t n) {
  if (n < 1) throw std::invalid_argument("clique needs n >= 1");
  std::vector<std::pair<vid_t, vid_t>> pairs;
  for (vid_t u = 0; u < n; ++u) {
    for (vid_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return Graph::from_pairs(std::move(pairs), n);
}

Graph gen_star(vid_t n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<std::pair<vid_t, vid_t>> pairs;
  for (vid_t v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return Graph::from_pairs(std::move(pairs), n);
}

Graph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::erdos_renyi:
      return gen_erdos_renyi(spec.n, spec.p, spec.seed);
    case GenSpec::Kind::kronecker:
      return gen_kronecker(spec.scale, spec.edgefactor, spec.seed, spec.initiator);
    case GenSpec::Kind::path:
      return gen_path(spec.n);
    case GenSpec::Kind::clique:
      return gen_clique(spec.n);
    case GenSpec::Kind::star:
      return gen_star(spec.n);
  }
  throw std::invalid_argument("unknown generator kind");
}

namespace {

double parse_double(std::string_view s) {
  // from_chars<double> is not available everywhere; stod is fine here.
  std::size_t used = 0;
  const double v = std::stod(std::string(s), &used);
  if (used != s.size()) throw std::invalid_argument("bad number: " + std::string(s));
  return v;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer: " + std::string(s));
  }
  return v;
}

}  // namespace

bool is_gen_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return false;
  const std::string_view kind = text.substr(0, colon);
  return kind == "er" || kind == "kron" || kind == "path" || kind == "clique" ||
         kind == "star";
}

GenSpec parse_gen_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("generator spec needs 'kind:key=value,...'");
  }
  const std::string_view kind = text.substr(0, colon);
  GenSpec spec;
  if (kind == "er") {
    spec.kind = GenSpec::Kind::erdos_renyi;
  } else if (kind == "kron") {
    spec.kind = GenSpec::Kind::kronecker;
  } else if (kind == "path") {
    spec.kind = GenSpec::Kind::path;
  } else if (kind == "clique") {
    spec.kind = GenSpec::Kind::clique;
  } else if (kind == "star") {
    spec.kind = GenSpec::Kind::star;
  } else {
    throw std::invalid_argument("unknown generator kind '" + std::string(kind) + "'");
  }

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item =
        comma == std::string_view::npos ? rest : rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("generator option needs key=value: " +
                                  std::string(item));
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_int(value);
    } else if (key == "p") {
      spec.p = parse_double(value);
    } else if (key == "scale") {
      spec.scale = parse_int(value);
    } else if (key == "ef") {
      spec.edgefactor = parse_int(value);
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(parse_int(value));
    } else if (key == "a" || key == "b" || key == "c" || key == "d") {
      spec.initiator[key[0] - 'a'] = parse_double(value);
    } else {
      throw std::invalid_argument("unknown generator option '" + std::string(key) + "'");
    }
  }
  return spec;
}

}  // namespace slimsell
