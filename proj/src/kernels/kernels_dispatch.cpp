#include "reqmine/kernels.hpp"

#include <cstdlib>
#include <string>

#include "reqmine/errors.hpp"

namespace reqmine::kernels {

std::vector<const Kernels*> available_kernels() {
    std::vector<const Kernels*> out{&scalar_kernels()};
#if defined(__x86_64__)
    if (cpu_has_avx2()) out.push_back(&avx2_kernels());
#endif
#if defined(__aarch64__)
    out.push_back(&neon_kernels());
#endif
    return out;
}

namespace {

const Kernels& select_kernels() {
    const char* requested = std::getenv("REQMINE_KERNEL");
    if (requested != nullptr && *requested != '\0') {
        const std::string name(requested);
        for (const Kernels* k : available_kernels()) {
            if (name == k->name) return *k;
        }
        throw Error("REQMINE_KERNEL=" + name + " is not available on this machine");
    }
    // Widest supported set wins; available_kernels() lists scalar first.
    return *available_kernels().back();
}

}  // namespace

const Kernels& active_kernels() {
    static const Kernels& selected = select_kernels();
    return selected;
}

}  // namespace reqmine::kernels
