# Servicios del núcleo: un paquete por área del laboratorio
#   fock          - espacio truncado, operadores y normas
#   araki_woods   - modelo (A, J, I, K_R), palabras de Wick, estado y flujo modular
#   multipliers   - cálculo de normas cb de multiplicadores radiales
#   quantization  - primera y segunda cuantización, bandas y red c.m.a.p.
#   deformation   - deformación maleable sobre el espacio doblado
#   verify        - suites de verificación del CLI
