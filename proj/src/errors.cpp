#include "toepcomm/errors.hpp"

namespace toepcomm {

bool is_input_error(const Error& e) {
    return dynamic_cast<const SyntaxError*>(&e) != nullptr ||
           dynamic_cast<const CompositionDomainError*>(&e) != nullptr ||
           dynamic_cast<const ResolutionError*>(&e) != nullptr ||
           dynamic_cast<const ConstantSymbolError*>(&e) != nullptr ||
           dynamic_cast<const UnsupportedSymbol*>(&e) != nullptr ||
           dynamic_cast<const OrderMismatch*>(&e) != nullptr ||
           dynamic_cast<const DimensionCap*>(&e) != nullptr ||
           dynamic_cast<const NotUnimodular*>(&e) != nullptr ||
           dynamic_cast<const PreconditionError*>(&e) != nullptr;
}

}  // namespace toepcomm
