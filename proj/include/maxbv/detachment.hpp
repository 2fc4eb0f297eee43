#pragma once

// Detachment sets {M f > f} and the shape of M f on each component.

#include <optional>
#include <vector>

#include "maxbv/maximal.hpp"

namespace maxbv {

struct Window {
    Rational lo;
    Rational hi;
};

// [min breakpoint - D - 1, max breakpoint + D + 1], D the breakpoint diameter.
Window default_window(const StepFunction& f);

enum class ComponentShape { Monotone, VShaped, Undetermined };

const char* shape_name(ComponentShape s);

struct DetachmentComponent {
    // Located endpoints. A finite endpoint is the attached side of the final
    // bisection bracket; a clipped one is the window edge.
    Rational lo;
    Rational hi;
    bool lo_clipped = false;
    bool hi_clipped = false;
    std::optional<ComponentShape> shape;  // set by classify_shape
    std::optional<Rational> vertex;       // argmin of a V shape
    std::optional<Rational> vertex_value;
    Rational lo_value;  // M f(lo)
    Rational hi_value;  // M f(hi)
};

inline const Rational kDefaultLocationTol = dyadic(40);
inline constexpr int kDefaultScanDensity = 8;
inline constexpr int kDefaultProbes = 257;

// M f(x) > limsup |f| at x. Points where limsup >= M f >= N_alpha f count as
// attached, which is what makes the detachment set open.
bool is_detached(const MaximalOperator& op, const Rational& x);

// Components of the detachment set inside the window, in order. The scan
// visits the window ends, every breakpoint inside, and `scan_density` equally
// spaced points inside each gap; endpoints are bisected to width <= tol.
std::vector<DetachmentComponent> detachment_set(const MaximalOperator& op, const Window& window,
                                                const Rational& tol = kDefaultLocationTol,
                                                int scan_density = kDefaultScanDensity);
std::vector<DetachmentComponent> detachment_set(const StepFunction& f, const RegionShape& shape,
                                                const Window& window, const Rational& tol = kDefaultLocationTol,
                                                int scan_density = kDefaultScanDensity);

// Samples M f at `probes` equally spaced points of the closed component.
DetachmentComponent classify_shape(const MaximalOperator& op, DetachmentComponent component,
                                   int probes = kDefaultProbes);

}  // namespace maxbv
