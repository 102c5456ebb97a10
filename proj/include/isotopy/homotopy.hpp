#pragma once

// Homotopy tests for cycles and fixed-endpoint paths given crossing words.
// Dispatch: sphere (everything contractible), torus (abelian fundamental
// group), hyperbolic closed surfaces (schema canonicalization + Dehn), and
// free groups (punctured plane, handled without any relator).

#include <memory>
#include <optional>

#include "isotopy/dehn.hpp"
#include "isotopy/generator_system.hpp"
#include "isotopy/schema.hpp"
#include "isotopy/word.hpp"

namespace isotopy {

// Free-group tests (cyclic words for cycles, plain words for paths).
inline bool free_cycles_conjugate(const Word& w1, const Word& w2) {
  Word a = cyclic_reduce(w1), b = cyclic_reduce(w2);
  if (a.size() != b.size()) return false;
  return least_rotation(a) == least_rotation(b);
}

inline bool free_words_equal(const Word& w1, const Word& w2) {
  return free_reduce(concat(w1, inverse(w2))).empty();
}

// Shared canonicalization/Dehn machinery for one generator system.
class HomotopyContext {
 public:
  explicit HomotopyContext(const GeneratorSystem& gs) : gs_(&gs) {
    switch (gs.cls.kind()) {
      case SurfaceKind::Sphere:
        break;
      case SurfaceKind::Torus:
        break;
      default: {
        require(gs.cls.boundary == 0, ErrorCode::SystemMismatch,
                "generator systems are built on closed surfaces");
        schema_ = canonicalize_schema(gs.relator);
        dehn_ = std::make_unique<DehnEngine>(canonical_relator(schema_->genus));
        break;
      }
    }
  }

  const GeneratorSystem& system() const { return *gs_; }

  Word canonical_word(const Word& w) const {
    check_alphabet(w);
    if (schema_) return schema_->translate(w);
    return free_reduce(w);
  }

  bool cycles_freely_homotopic(const Word& w1, const Word& w2) const {
    check_alphabet(w1);
    check_alphabet(w2);
    switch (gs_->cls.kind()) {
      case SurfaceKind::Sphere:
        return true;
      case SurfaceKind::Torus:
        return abelianization(cyclic_reduce(w1), 2) == abelianization(cyclic_reduce(w2), 2);
      default:
        return dehn_->conjugate(schema_->translate(w1), schema_->translate(w2));
    }
  }

  bool paths_homotopic_fixed_endpoints(const Word& w1, const Word& w2) const {
    check_alphabet(w1);
    check_alphabet(w2);
    Word diff = concat(w1, inverse(w2));
    switch (gs_->cls.kind()) {
      case SurfaceKind::Sphere:
        return true;
      case SurfaceKind::Torus: {
        auto v = abelianization(free_reduce(diff), 2);
        return v[0] == 0 && v[1] == 0;
      }
      default:
        return dehn_->is_trivial(schema_->translate(diff));
    }
  }

  // Minimal-length conjugacy representative (diagnostics / witnesses).
  Word reduced_cycle(const Word& w) const {
    check_alphabet(w);
    switch (gs_->cls.kind()) {
      case SurfaceKind::Sphere:
        return {};
      case SurfaceKind::Torus:
        return cyclic_reduce(w);
      default:
        return dehn_->cyclic_reduce_min(schema_->translate(w));
    }
  }

 private:
  void check_alphabet(const Word& w) const {
    for (Letter x : w)
      require(std::abs(x) >= 1 && std::abs(x) <= gs_->generator_count(),
              ErrorCode::SystemMismatch, "word letter outside the generator system");
  }

  const GeneratorSystem* gs_;
  std::optional<CanonicalSchema> schema_;
  std::unique_ptr<DehnEngine> dehn_;
};

inline bool cycles_freely_homotopic(const GeneratorSystem& gs, const Word& w1, const Word& w2) {
  return HomotopyContext(gs).cycles_freely_homotopic(w1, w2);
}

inline bool paths_homotopic_fixed_endpoints(const GeneratorSystem& gs, const Word& w1,
                                            const Word& w2) {
  return HomotopyContext(gs).paths_homotopic_fixed_endpoints(w1, w2);
}

}  // namespace isotopy
