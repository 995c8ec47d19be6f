# Módulo de pruebas
