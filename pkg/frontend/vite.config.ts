import { defineConfig } from 'vitest/config';

export default defineConfig({
  server: {
    // dev-mode proxy to a locally running `llmplan serve`
    proxy: {
      '/api': 'http://127.0.0.1:8080',
    },
  },
  test: {
    environment: 'jsdom',
    include: ['tests/**/*.test.ts'],
  },
});
