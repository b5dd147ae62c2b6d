/**
 * Thin typed client for the analysis service.
 *
 * Each logical channel (analyze, sweep, one per pinned design) carries a
 * monotonically increasing ticket; a response is delivered only if it is
 * still the channel's newest request, and superseded in-flight requests are
 * aborted.  Rapid parameter changes therefore can never render out of
 * order: latest wins.
 */

import type {
  AnalyzeRequest,
  AnalyzeResponse,
  ServiceErrorBody,
  SweepRequest,
  SweepResponse,
} from './types.js';

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

export class ServiceError extends Error {
  readonly field: string;

  constructor(field: string, message: string) {
    super(`${field}: ${message}`);
    this.field = field;
  }
}

/** Thrown internally when a response loses the latest-wins race. */
export class StaleResponseError extends Error {
  constructor() {
    super('superseded by a newer request');
  }
}

class Channel {
  private ticket = 0;
  private controller: AbortController | null = null;

  /** Claim the channel; aborts whatever was in flight. */
  next(): { ticket: number; signal: AbortSignal } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.ticket += 1;
    return { ticket: this.ticket, signal: this.controller.signal };
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.ticket;
  }
}

export class AnalysisClient {
  private readonly fetchImpl: FetchLike;
  private readonly channels = new Map<string, Channel>();

  constructor(
    readonly baseUrl: string,
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private channel(name: string): Channel {
    let channel = this.channels.get(name);
    if (!channel) {
      channel = new Channel();
      this.channels.set(name, channel);
    }
    return channel;
  }

  /**
   * POST a request on a named channel.  Resolves with the parsed body only
   * if no newer request was issued on the same channel in the meantime;
   * otherwise rejects with StaleResponseError.
   */
  private async post<T>(channelName: string, path: string, body: unknown): Promise<T> {
    const channel = this.channel(channelName);
    const { ticket, signal } = channel.next();
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(body),
        signal,
      });
    } catch (err) {
      if (!channel.isCurrent(ticket)) {
        throw new StaleResponseError();
      }
      throw err;
    }
    const payload = (await response.json()) as T | ServiceErrorBody;
    if (!channel.isCurrent(ticket)) {
      throw new StaleResponseError();
    }
    if (!response.ok) {
      const { error } = payload as ServiceErrorBody;
      throw new ServiceError(error.field, error.message);
    }
    return payload as T;
  }

  analyze(request: AnalyzeRequest, channel = 'analyze'): Promise<AnalyzeResponse> {
    return this.post<AnalyzeResponse>(channel, '/analyze', request);
  }

  sweep(request: SweepRequest): Promise<SweepResponse> {
    return this.post<SweepResponse>('sweep', '/sweep', request);
  }

  async health(): Promise<{ status: string; version: string }> {
    const response = await this.fetchImpl(`${this.baseUrl}/health`);
    return (await response.json()) as { status: string; version: string };
  }
}
