# Módulo núcleo
