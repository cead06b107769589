#include "matdist/enumerate.hpp"

namespace matdist {

void check_budget(const mpz_class& size, std::uint64_t budget, const char* what) {
    if (size > mpz_class(static_cast<unsigned long>(budget)))
        throw BudgetExceededError(std::string(what) + " has " + size.get_str() +
                                  " elements, over the budget of " + std::to_string(budget));
}

MatrixSpace::MatrixSpace(FieldPtr field, unsigned n, std::uint64_t budget)
    : field_(std::move(field)), n_(n) {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), field_->q(), static_cast<unsigned long>(n) * n);
    check_budget(s, budget, "matrix space");
    size_ = s.get_ui();
}

TupleSpace::TupleSpace(FieldPtr field, unsigned n, unsigned r, std::uint64_t budget)
    : field_(std::move(field)), n_(n), r_(r) {
    mpz_class b;
    mpz_ui_pow_ui(b.get_mpz_t(), field_->q(), static_cast<unsigned long>(n) * n);
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), b.get_mpz_t(), r);
    check_budget(s, budget, "tuple space");
    block_ = b.get_ui();
    size_ = s.get_ui();
}

MonicPolySpace::MonicPolySpace(FieldPtr field, unsigned d, std::uint64_t budget)
    : field_(std::move(field)), d_(d) {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), field_->q(), d);
    check_budget(s, budget, "monic polynomial space");
    size_ = s.get_ui();
}

}  // namespace matdist
