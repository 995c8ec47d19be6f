# Adaptadores de entrada - puntos de entrada
