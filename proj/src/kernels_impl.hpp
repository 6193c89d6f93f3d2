#pragma once

#include "wpo/kernels.hpp"

namespace wpo::kernels::detail {

bool leq_scalar(const Count* a, const Count* b, std::size_t n);
void join_scalar(const Count* a, const Count* b, Count* out, std::size_t n);
void monus_scalar(const Count* a, const Delta* d, Count* out, std::size_t n);
std::size_t find_letter_scalar(const Letter* s, std::size_t n, Letter x);
bool embeds_scalar(const Letter* u, std::size_t nu, const Letter* v,
                   std::size_t nv);

#ifdef WPO_HAVE_AVX2
bool leq_avx2(const Count* a, const Count* b, std::size_t n);
void join_avx2(const Count* a, const Count* b, Count* out, std::size_t n);
void monus_avx2(const Count* a, const Delta* d, Count* out, std::size_t n);
std::size_t find_letter_avx2(const Letter* s, std::size_t n, Letter x);
bool embeds_avx2(const Letter* u, std::size_t nu, const Letter* v,
                 std::size_t nv);
#endif

} // namespace wpo::kernels::detail
